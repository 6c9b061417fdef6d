//! Kyoto paths over a perfect crystal: λ-paths, their H-length, principal
//! degree and modified length, exhaustive enumeration up to a degree bound,
//! and the generating functions built from them.
//!
//! A path `... ⊗ b2 ⊗ b1` is stored as its finite prefix `b1, ..., bL`
//! (position order) with `b_k = g_k` for `k > L`.
//!
//! The degree of a path is a sum of local terms
//! `t_j(b_{j+1}, b_j) = HT(δ) * j * ΔH_j + HT(wt(g_j) - wt(b_j))`, where
//! `ΔH_j = H(b_{j+1}, b_j) - H(g_{j+1}, g_j)`. Even-position energy
//! differences are non-positive for the ground states used here, so partial
//! sums are not monotone. The enumerator instead computes, for a window of
//! `L` positions, the exact minimum of `Σ_{i >= j} t_i` over all
//! completions inside the window and prunes on `partial + minimum`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use log::{debug, info};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::crystal::{
    headed_signature_target, AffineWeight, Direction, DominantWeight, GroundState,
    PerfectCrystalSpec, SignatureHit, COLORS,
};
use crate::error::{Error, Result};
use crate::series::XLaurentSeries;

/// A λ-path in canonical form: `prefix[k-1] = b_k`, and the last entry
/// differs from the ground element at that position (or the prefix is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaPath {
    pub lambda: DominantWeight,
    prefix: Vec<usize>,
}

impl LambdaPath {
    /// Deviation prefix `b1, ..., bL` in position order.
    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn is_ground(&self) -> bool {
        self.is_empty()
    }
}

impl fmt::Display for LambdaPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "...")?;
        for b in self.prefix.iter().rev() {
            write!(f, " ⊗ {b}")?;
        }
        Ok(())
    }
}

/// `ℓ_H`, `|b|` and the modified length `ℓ` of a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathStats {
    pub h_length: i64,
    pub degree: u64,
    pub mod_length: i64,
}

/// Writes `v = m α0 + n α1` and returns `(m, n)` when both are integers.
pub fn decompose_roots(spec: &PerfectCrystalSpec, v: AffineWeight) -> Option<(i64, i64)> {
    let [a0, a1] = spec.simple_roots;
    // pick a pair of coordinates with nonzero minor
    for (r, s) in [(0, 2), (1, 2), (0, 1)] {
        let det = a0[r] * a1[s] - a1[r] * a0[s];
        if det == 0 {
            continue;
        }
        let m_num = v[r] * a1[s] - a1[r] * v[s];
        let n_num = a0[r] * v[s] - v[r] * a0[s];
        if m_num % det != 0 || n_num % det != 0 {
            return None;
        }
        let (m, n) = (m_num / det, n_num / det);
        let ok = (0..3).all(|c| m * a0[c] + n * a1[c] == v[c]);
        return ok.then_some((m, n));
    }
    None
}

/// Paths for one crystal and one dominant weight.
#[derive(Clone, Debug)]
pub struct PathSpace {
    spec: PerfectCrystalSpec,
    ground: GroundState,
    /// `HT(wt(g) - wt(b))` for each phase of the ground state and element.
    class_height: Vec<Vec<i64>>,
}

impl PathSpace {
    pub fn new(spec: PerfectCrystalSpec, lambda: DominantWeight) -> Result<Self> {
        spec.validate()?;
        let ground = spec.ground_state(lambda)?;
        let mut class_height = Vec::new();
        for &g in &ground.elements {
            let mut row = Vec::new();
            for b in 0..spec.size() {
                let v = [
                    spec.weights[g][0] - spec.weights[b][0],
                    spec.weights[g][1] - spec.weights[b][1],
                    0,
                ];
                let (m, n) = decompose_roots(&spec, v)
                    .ok_or_else(|| Error::NonIntegralGrading(format!("{v:?}")))?;
                row.push(m + n);
            }
            class_height.push(row);
        }
        Ok(PathSpace {
            spec,
            ground,
            class_height,
        })
    }

    /// Paths over `B^{1,3}`.
    pub fn b13(lambda: DominantWeight) -> Result<Self> {
        Self::new(PerfectCrystalSpec::b13(), lambda)
    }

    pub fn spec(&self) -> &PerfectCrystalSpec {
        &self.spec
    }

    pub fn ground(&self) -> &GroundState {
        &self.ground
    }

    pub fn lambda(&self) -> DominantWeight {
        self.ground.lambda
    }

    pub fn period(&self) -> usize {
        self.ground.period()
    }

    /// Canonical path from elements `b1, b2, ...` in position order.
    pub fn path(&self, elems: &[usize]) -> LambdaPath {
        let mut prefix = elems.to_vec();
        while let Some(&last) = prefix.last() {
            if last == self.ground.at(prefix.len()) {
                prefix.pop();
            } else {
                break;
            }
        }
        LambdaPath {
            lambda: self.lambda(),
            prefix,
        }
    }

    pub fn ground_path(&self) -> LambdaPath {
        self.path(&[])
    }

    /// `b_k` for `k >= 1`.
    pub fn element(&self, p: &LambdaPath, k: usize) -> usize {
        p.prefix
            .get(k - 1)
            .copied()
            .unwrap_or_else(|| self.ground.at(k))
    }

    fn delta_h(&self, j: usize, left: usize, right: usize) -> i64 {
        self.spec.energy(left, right) - self.spec.energy(self.ground.at(j + 1), self.ground.at(j))
    }

    fn local_degree(&self, j: usize, left: usize, right: usize) -> i64 {
        self.spec.delta_height() * j as i64 * self.delta_h(j, left, right)
            + self.class_height[(j - 1) % self.period()][right]
    }

    /// `ℓ_H(b) = Σ_k (H(b_{k+1}, b_k) - H(g_{k+1}, g_k))`.
    pub fn h_length(&self, p: &LambdaPath) -> i64 {
        (1..=p.len())
            .map(|k| self.delta_h(k, self.element(p, k + 1), self.element(p, k)))
            .sum()
    }

    /// `WT(b) = λ + Σ (wt(b_k) - wt(g_k)) - δ Σ k (H(b_{k+1}, b_k) - H(g_{k+1}, g_k))`.
    pub fn affine_weight(&self, p: &LambdaPath) -> AffineWeight {
        let mut w = self.lambda().affine();
        for k in 1..=p.len() {
            let b = self.element(p, k);
            let g = self.ground.at(k);
            w[0] += self.spec.weights[b][0] - self.spec.weights[g][0];
            w[1] += self.spec.weights[b][1] - self.spec.weights[g][1];
            w[2] -= k as i64 * self.delta_h(k, self.element(p, k + 1), b);
        }
        w
    }

    /// `|b| = HT(λ - WT(b))`.
    pub fn degree(&self, p: &LambdaPath) -> Result<u64> {
        let wt = self.affine_weight(p);
        let lam = self.lambda().affine();
        let v = [lam[0] - wt[0], lam[1] - wt[1], lam[2] - wt[2]];
        match decompose_roots(&self.spec, v) {
            Some((m, n)) if m >= 0 && n >= 0 => Ok((m + n) as u64),
            _ => Err(Error::NonIntegralGrading(format!("{v:?}"))),
        }
    }

    /// Offset `c` in `ℓ(b) = 2 ℓ_H(b) - (c - b1)`.
    fn mod_length_offset(&self) -> Result<i64> {
        match self.lambda() {
            DominantWeight::THREE_L0 => Ok(3),
            DominantWeight::TWO_L0_L1 => Ok(2),
            other => Err(Error::UnsupportedWeight(other.to_string())),
        }
    }

    /// `ℓ(b) = 2 ℓ_H(b) - (3 - b1)` for `3Λ0`, `2 ℓ_H(b) - (2 - b1)` for
    /// `2Λ0 + Λ1`.
    pub fn mod_length(&self, p: &LambdaPath) -> Result<i64> {
        let c = self.mod_length_offset()?;
        Ok(2 * self.h_length(p) - (c - self.element(p, 1) as i64))
    }

    /// All three statistics. The modified length is 0 for weights where it
    /// is undefined.
    pub fn stats(&self, p: &LambdaPath) -> Result<PathStats> {
        Ok(PathStats {
            h_length: self.h_length(p),
            degree: self.degree(p)?,
            mod_length: self.mod_length(p).unwrap_or(0),
        })
    }

    /// `b p`: the path `b` moved up by `d` positions with `p` placed in
    /// front. `p` is given in the order `(p_d, ..., p_1)`.
    pub fn concat(&self, b: &LambdaPath, p: &[usize]) -> LambdaPath {
        let d = self.period();
        assert_eq!(
            p.len(),
            d,
            "prefix must have one element per period position"
        );
        let mut elems: Vec<usize> = p.iter().rev().copied().collect();
        for k in 1..=b.len() {
            elems.push(self.element(b, k));
        }
        self.path(&elems)
    }

    /// `(b_d, ..., b_1)`.
    pub fn leading_block(&self, p: &LambdaPath) -> Vec<usize> {
        (1..=self.period())
            .rev()
            .map(|k| self.element(p, k))
            .collect()
    }

    /// Applies `e_i` / `f_i` to an infinite path through a finite window.
    ///
    /// The part of the path left of the window is the ground tail, which
    /// acts as a highest weight vector of weight `ε(g_w)`; it enters the
    /// signature as a head of plus signs. The window starts one period past
    /// the last deviation and grows by a period until two successive
    /// extensions leave the outcome unchanged.
    pub fn apply(&self, p: &LambdaPath, i: usize, dir: Direction) -> Option<LambdaPath> {
        let d = self.period();
        // Err(()) when the operator reaches the head: the window is too short
        let outcome = |w: usize| -> std::result::Result<Option<LambdaPath>, ()> {
            let word: Vec<usize> = (1..=w).rev().map(|k| self.element(p, k)).collect();
            let head = self.spec.eps[i][self.ground.at(w)];
            match headed_signature_target(&self.spec, head, &word, i, dir) {
                None => Ok(None),
                Some(SignatureHit::Head) => Err(()),
                Some(SignatureHit::Factor(pos)) => {
                    let k = w - pos;
                    let mut elems: Vec<usize> = (1..=w).map(|j| self.element(p, j)).collect();
                    elems[k - 1] = self.spec.apply(i, dir, word[pos]).expect("signature rule");
                    Ok(Some(self.path(&elems)))
                }
            }
        };
        let mut w = p.len() + d;
        let mut prev = outcome(w);
        let mut unchanged = 0;
        while unchanged < 2 {
            w += d;
            let next = outcome(w);
            if next == prev && next.is_ok() {
                unchanged += 1;
            } else {
                unchanged = 0;
            }
            prev = next;
        }
        prev.expect("stable outcome")
    }

    /// Visits every path with at least one deviation inside positions
    /// `1..=window` and degree at most `max_degree`, plus the ground path.
    ///
    /// The callback receives `(b1..bL, h_length, degree)`.
    pub fn for_each_path<F>(&self, max_degree: u64, window: usize, mut visit: F)
    where
        F: FnMut(&[usize], i64, u64),
    {
        let tables = self.window_tables(window);
        visit(&[], 0, 0);
        let mut stack = Vec::with_capacity(window + 1);
        for v in 0..self.spec.size() {
            self.dfs_from(&tables, max_degree as i64, v, &mut stack, &mut visit);
        }
    }

    fn dfs_from<F>(
        &self,
        tables: &WindowTables,
        max_degree: i64,
        first: usize,
        stack: &mut Vec<usize>,
        visit: &mut F,
    ) where
        F: FnMut(&[usize], i64, u64),
    {
        if tables.suffix_min[1][first] > max_degree {
            return;
        }
        stack.clear();
        stack.push(first);
        self.dfs(tables, max_degree, stack, 0, 0, visit);
    }

    fn dfs<F>(
        &self,
        tables: &WindowTables,
        max_degree: i64,
        c: &mut Vec<usize>,
        partial: i64,
        lh: i64,
        visit: &mut F,
    ) where
        F: FnMut(&[usize], i64, u64),
    {
        let k = c.len();
        let last = c[k - 1];
        if last != self.ground.at(k) {
            let g_next = self.ground.at(k + 1);
            let deg = partial + tables.t[k][g_next][last];
            if deg <= max_degree {
                debug_assert!(deg >= 0);
                visit(c, lh + tables.dh[k][g_next][last], deg as u64);
            }
        }
        if k == tables.window {
            return;
        }
        for v in 0..self.spec.size() {
            let p2 = partial + tables.t[k][v][last];
            if p2 + tables.suffix_min[k + 1][v] > max_degree {
                continue;
            }
            c.push(v);
            self.dfs(tables, max_degree, c, p2, lh + tables.dh[k][v][last], visit);
            c.pop();
        }
    }

    fn window_tables(&self, window: usize) -> WindowTables {
        let n = self.spec.size();
        let mut t = vec![vec![vec![0i64; n]; n]; window + 2];
        let mut dh = vec![vec![vec![0i64; n]; n]; window + 2];
        for j in 1..=window {
            for a in 0..n {
                for b in 0..n {
                    t[j][a][b] = self.local_degree(j, a, b);
                    dh[j][a][b] = self.delta_h(j, a, b);
                }
            }
        }
        const INF: i64 = i64::MAX / 4;
        let mut suffix_min = vec![vec![INF; n]; window + 2];
        suffix_min[window + 1][self.ground.at(window + 1)] = 0;
        for j in (1..=window).rev() {
            for b in 0..n {
                suffix_min[j][b] = (0..n)
                    .filter(|&a| suffix_min[j + 1][a] < INF)
                    .map(|a| t[j][a][b] + suffix_min[j + 1][a])
                    .min()
                    .unwrap_or(INF);
            }
        }
        WindowTables {
            window,
            t,
            dh,
            suffix_min,
        }
    }

    /// Histogram of `(leading block, ℓ_H, |b|)` over all paths of degree at
    /// most `max_degree` with deviations inside the window. The first-element
    /// subtrees run in parallel.
    pub fn census(&self, max_degree: u64, window: usize) -> PathCensus {
        let tables = self.window_tables(window);
        let d = self.period();
        let per_first: Vec<BTreeMap<CensusKey, u64>> = (0..self.spec.size())
            .into_par_iter()
            .map(|v| {
                let mut counts = BTreeMap::new();
                let mut stack = Vec::with_capacity(window + 1);
                self.dfs_from(
                    &tables,
                    max_degree as i64,
                    v,
                    &mut stack,
                    &mut |c, lh, deg| {
                        let block = (1..=d)
                            .rev()
                            .map(|k| c.get(k - 1).copied().unwrap_or_else(|| self.ground.at(k)))
                            .collect();
                        *counts
                            .entry(CensusKey {
                                block,
                                h_length: lh,
                                degree: deg,
                            })
                            .or_insert(0) += 1;
                    },
                );
                counts
            })
            .collect();
        let mut counts = BTreeMap::new();
        counts.insert(
            CensusKey {
                block: self.ground.elements.iter().rev().copied().collect(),
                h_length: 0,
                degree: 0,
            },
            1,
        );
        for m in per_first {
            for (k, v) in m {
                *counts.entry(k).or_insert(0) += v;
            }
        }
        PathCensus {
            lambda: self.lambda(),
            mod_length_offset: self.mod_length_offset().ok(),
            max_degree,
            window,
            counts,
        }
    }

    /// Grows the window one period at a time until two successive growths
    /// leave the census unchanged.
    pub fn stable_census(&self, max_degree: u64) -> Result<PathCensus> {
        let d = self.period();
        let limit = 8 * (max_degree as usize + 4) + 8 * d;
        let mut window = d;
        let mut prev = self.census(max_degree, window);
        let mut unchanged = 0;
        while unchanged < 2 {
            window += d;
            if window > limit {
                return Err(Error::NoStabilization(window));
            }
            let next = self.census(max_degree, window);
            if next.counts == prev.counts {
                unchanged += 1;
            } else {
                unchanged = 0;
            }
            debug!(
                "{}: window {window}, {} paths of degree <= {max_degree}",
                self.lambda(),
                next.total()
            );
            prev = next;
        }
        // report the smallest window that already had the final census
        prev.window = window - 2 * d;
        info!(
            "{}: enumeration stable at window {} for degree <= {max_degree} ({} paths)",
            self.lambda(),
            prev.window,
            prev.total()
        );
        Ok(prev)
    }

    /// Every λ-path with `|b| <= max_degree`, each exactly once, with stats.
    pub fn enumerate_paths(&self, max_degree: u64) -> Result<Vec<(LambdaPath, PathStats)>> {
        let window = self.stable_census(max_degree)?.window;
        let mut out = Vec::new();
        let offset = self.mod_length_offset().ok();
        self.for_each_path(max_degree, window, |c, lh, deg| {
            let p = self.path(c);
            let b1 = self.element(&p, 1) as i64;
            let stats = PathStats {
                h_length: lh,
                degree: deg,
                mod_length: offset.map_or(0, |o| 2 * lh - (o - b1)),
            };
            out.push((p, stats));
        });
        out.sort_by(|a, b| (a.1.degree, &a.0).cmp(&(b.1.degree, &b.0)));
        Ok(out)
    }

    /// Breadth-first search from the ground path by `f_0`, `f_1`; level `n`
    /// holds the paths reachable by exactly `n` lowering operators.
    pub fn bfs_levels(&self, max_degree: u64) -> Vec<Vec<LambdaPath>> {
        let mut levels = vec![vec![self.ground_path()]];
        for _ in 0..max_degree {
            let mut next: HashSet<LambdaPath> = HashSet::new();
            for p in levels.last().unwrap() {
                for i in COLORS {
                    if let Some(q) = self.apply(p, i, Direction::Lower) {
                        next.insert(q);
                    }
                }
            }
            let mut v: Vec<LambdaPath> = next.into_iter().collect();
            v.sort();
            levels.push(v);
        }
        levels
    }
}

struct WindowTables {
    window: usize,
    /// `t[j][b_{j+1}][b_j]`.
    t: Vec<Vec<Vec<i64>>>,
    dh: Vec<Vec<Vec<i64>>>,
    /// Exact minimum of `Σ_{i >= j} t_i` over completions inside the window
    /// with `b_j` fixed.
    suffix_min: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusKey {
    /// `(b_d, ..., b_1)`.
    pub block: Vec<usize>,
    pub h_length: i64,
    pub degree: u64,
}

/// Path counts grouped by leading block, H-length and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCensus {
    pub lambda: DominantWeight,
    mod_length_offset: Option<i64>,
    pub max_degree: u64,
    /// Window (number of positions) at which the census is complete.
    pub window: usize,
    pub counts: BTreeMap<CensusKey, u64>,
}

impl PathCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of paths of each degree `0..=max_degree`.
    pub fn degree_counts(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.max_degree as usize + 1];
        for (k, c) in &self.counts {
            v[k.degree as usize] += c;
        }
        v
    }

    fn mod_length(&self, key: &CensusKey) -> Result<i64> {
        let c = self
            .mod_length_offset
            .ok_or_else(|| Error::UnsupportedWeight(self.lambda.to_string()))?;
        Ok(2 * key.h_length - (c - *key.block.last().unwrap() as i64))
    }

    fn series_with<F>(
        &self,
        trunc: usize,
        mut x_exp: F,
        block: Option<&[usize]>,
    ) -> Result<XLaurentSeries>
    where
        F: FnMut(&CensusKey) -> Result<i64>,
    {
        assert!(
            trunc as u64 <= self.max_degree + 1,
            "census only covers degree <= {}",
            self.max_degree
        );
        let mut triples = Vec::new();
        for (k, &c) in &self.counts {
            if (k.degree as usize) < trunc && block.is_none_or(|b| b == k.block.as_slice()) {
                triples.push((x_exp(k)?, k.degree as usize, BigInt::from(c)));
            }
        }
        Ok(XLaurentSeries::from_triples(triples, trunc))
    }

    /// `J(x, q) = Σ x^{ℓ(b)} q^{|b|}` modulo `q^trunc`.
    pub fn j_series(&self, trunc: usize) -> Result<XLaurentSeries> {
        self.series_with(trunc, |k| self.mod_length(k), None)
    }

    /// `J_p` restricted to paths with leading block `p = (p_d, ..., p_1)`.
    pub fn j_prefix_series(&self, block: &[usize], trunc: usize) -> Result<XLaurentSeries> {
        self.series_with(trunc, |k| self.mod_length(k), Some(block))
    }

    /// `F^(D)(x, q) = Σ x^{D ℓ_H(b)} q^{|b|}`; `D` is not validated here.
    pub fn fd_series(
        &self,
        d: u32,
        block: Option<&[usize]>,
        trunc: usize,
    ) -> Result<XLaurentSeries> {
        self.series_with(trunc, |k| Ok(d as i64 * k.h_length), block)
    }

    /// Smallest and largest modified length seen.
    pub fn mod_length_range(&self) -> Option<(i64, i64)> {
        let vals: Vec<i64> = self
            .counts
            .keys()
            .filter_map(|k| self.mod_length(k).ok())
            .collect();
        Some((*vals.iter().min()?, *vals.iter().max()?))
    }

    pub fn h_length_range(&self) -> Option<(i64, i64)> {
        let lo = self.counts.keys().map(|k| k.h_length).min()?;
        let hi = self.counts.keys().map(|k| k.h_length).max()?;
        Some((lo, hi))
    }
}

/// `J(x, q)` for `λ` over `B^{1,3}`, modulo `q^trunc`.
pub fn gf_j(lambda: DominantWeight, trunc: usize) -> Result<XLaurentSeries> {
    let space = PathSpace::b13(lambda)?;
    space.stable_census(trunc as u64 - 1)?.j_series(trunc)
}

/// `J_p(x, q)` for the leading block `p = (p2, p1)`.
pub fn gf_j_prefix(
    lambda: DominantWeight,
    block: &[usize],
    trunc: usize,
) -> Result<XLaurentSeries> {
    let space = PathSpace::b13(lambda)?;
    space
        .stable_census(trunc as u64 - 1)?
        .j_prefix_series(block, trunc)
}

/// `F^(D)(x, q)`; `D` must divide `d * HT(δ)`.
pub fn gf_fd(lambda: DominantWeight, d: u32, trunc: usize) -> Result<XLaurentSeries> {
    let space = PathSpace::b13(lambda)?;
    let bound = space.period() as i64 * space.spec().delta_height();
    if d == 0 || bound % d as i64 != 0 {
        return Err(Error::InvalidDivisor(d, bound));
    }
    space
        .stable_census(trunc as u64 - 1)?
        .fd_series(d, None, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PathSpace {
        PathSpace::b13(DominantWeight::THREE_L0).unwrap()
    }

    #[test]
    fn canonical_form_drops_ground_tail() {
        let s = s3();
        let p = s.path(&[2, 0, 3, 0]);
        assert_eq!(p.prefix(), &[2]);
        assert!(s.path(&[3, 0, 3]).is_ground());
    }

    #[test]
    fn ground_path_stats() {
        let s = s3();
        let st = s.stats(&s.ground_path()).unwrap();
        assert_eq!(
            st,
            PathStats {
                h_length: 0,
                degree: 0,
                mod_length: 0
            }
        );
    }

    #[test]
    fn single_deviation() {
        let s = s3();
        let p = s.path(&[2]);
        // H(0,2) - H(0,3) = -2 - (-3)
        assert_eq!(s.h_length(&p), 1);
        assert_eq!(s.degree(&p).unwrap(), 1);
        assert_eq!(s.mod_length(&p).unwrap(), 1);
    }

    #[test]
    fn alternating_prefix() {
        let s = s3();
        let p = s.path(&[2, 1]);
        assert_eq!(s.degree(&p).unwrap(), 2);
        let p = s.path(&[2, 1, 2, 1]);
        assert_eq!(s.h_length(&p), 1);
        assert_eq!(s.mod_length(&p).unwrap(), 1);
        assert_eq!(s.degree(&p).unwrap(), 4);
    }

    #[test]
    fn mod_length_needs_supported_weight() {
        let s = PathSpace::b13(DominantWeight::new(0, 3)).unwrap();
        assert!(matches!(
            s.mod_length(&s.ground_path()),
            Err(Error::UnsupportedWeight(_))
        ));
    }

    #[test]
    fn low_degree_enumeration() {
        let s = s3();
        let v = s.enumerate_paths(0).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].0.is_ground());
        let v = s.enumerate_paths(1).unwrap();
        let prefixes: Vec<&[usize]> = v.iter().map(|(p, _)| p.prefix()).collect();
        assert_eq!(prefixes, vec![&[][..], &[2][..]]);
    }

    #[test]
    fn visitor_agrees_with_pointwise_stats() {
        let s = PathSpace::b13(DominantWeight::TWO_L0_L1).unwrap();
        for (p, st) in s.enumerate_paths(8).unwrap() {
            assert_eq!(s.stats(&p).unwrap(), st, "{p}");
        }
    }

    #[test]
    fn operator_on_ground_path() {
        let s = s3();
        let g = s.ground_path();
        assert_eq!(s.apply(&g, 1, Direction::Lower), None);
        assert_eq!(s.apply(&g, 0, Direction::Lower), Some(s.path(&[2])));
        assert_eq!(s.apply(&g, 0, Direction::Raise), None);
        let p = s.path(&[2]);
        assert_eq!(s.apply(&p, 0, Direction::Raise), Some(g));
    }

    #[test]
    fn invalid_divisor() {
        assert_eq!(
            gf_fd(DominantWeight::THREE_L0, 3, 5),
            Err(Error::InvalidDivisor(3, 4))
        );
    }

    #[test]
    fn first_coefficients_of_j() {
        let j = gf_j(DominantWeight::THREE_L0, 1).unwrap();
        assert_eq!(j, XLaurentSeries::one(1));
    }
}
