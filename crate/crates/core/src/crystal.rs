//! Finite perfect crystals for the affine algebra of type A_1^(1).
//!
//! Everything is table driven: [`PerfectCrystalSpec::b13`] fills the tables
//! for the Kirillov-Reshetikhin crystal `B^{1,3}`, and every algorithm in
//! the crate reads the tables rather than hard-coding that crystal.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Index set `{0, 1}`.
pub const COLORS: [usize; 2] = [0, 1];

/// An affine weight `c0 Λ0 + c1 Λ1 + d δ`, stored as `[c0, c1, d]`.
pub type AffineWeight = [i64; 3];

/// Direction of a Kashiwara operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectCrystalSpec {
    pub name: String,
    pub labels: Vec<String>,
    /// `f_arrows[i][b]` is `f_i b`, if defined.
    pub f_arrows: [Vec<Option<usize>>; 2],
    pub eps: [Vec<u32>; 2],
    pub phi: [Vec<u32>; 2],
    /// Classical weight of each element in the `(Λ0, Λ1)` basis.
    pub weights: Vec<[i64; 2]>,
    /// `energy[a][b] = H(a ⊗ b)`, with `a` the left tensor factor.
    pub energy: Vec<Vec<i64>>,
    pub level: u32,
    /// Labels `a_i` (so `δ = Σ a_i α_i`) and colabels `a_i^∨`.
    pub marks: [i64; 2],
    pub comarks: [i64; 2],
    /// Simple roots in `(Λ0, Λ1, δ)` coordinates.
    pub simple_roots: [AffineWeight; 2],
}

impl PerfectCrystalSpec {
    /// The level 3 Kirillov-Reshetikhin crystal `B^{1,3}`:
    /// `0 -> 1 -> 2 -> 3` under `f_1`, reversed under `f_0`,
    /// with energy `H(a, b) = max(a - 3, -b)`.
    pub fn b13() -> Self {
        let n = 4usize;
        let f1 = (0..n).map(|k| (k < 3).then_some(k + 1)).collect();
        let f0 = (0..n).map(|k| k.checked_sub(1)).collect();
        let eps1: Vec<u32> = (0..n as u32).collect();
        let phi1: Vec<u32> = (0..n as u32).map(|k| 3 - k).collect();
        let energy = (0..n as i64)
            .map(|a| (0..n as i64).map(|b| (a - 3).max(-b)).collect())
            .collect();
        PerfectCrystalSpec {
            name: "B^{1,3}".into(),
            labels: (0..n).map(|k| k.to_string()).collect(),
            f_arrows: [f0, f1],
            eps: [phi1.clone(), eps1.clone()],
            phi: [eps1, phi1],
            weights: (0..n as i64).map(|k| [2 * k - 3, 3 - 2 * k]).collect(),
            energy,
            level: 3,
            marks: [1, 1],
            comarks: [1, 1],
            simple_roots: [[2, -2, 1], [-2, 2, 0]],
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn f(&self, i: usize, b: usize) -> Option<usize> {
        self.f_arrows[i][b]
    }

    pub fn e(&self, i: usize, b: usize) -> Option<usize> {
        self.f_arrows[i].iter().position(|&t| t == Some(b))
    }

    pub fn apply(&self, i: usize, dir: Direction, b: usize) -> Option<usize> {
        match dir {
            Direction::Lower => self.f(i, b),
            Direction::Raise => self.e(i, b),
        }
    }

    pub fn energy(&self, left: usize, right: usize) -> i64 {
        self.energy[left][right]
    }

    /// `HT(δ) = Σ a_i`.
    pub fn delta_height(&self) -> i64 {
        self.marks.iter().sum()
    }

    /// `ε(b)` and `φ(b)` as dominant weights.
    pub fn eps_weight(&self, b: usize) -> DominantWeight {
        DominantWeight::new(self.eps[0][b], self.eps[1][b])
    }

    pub fn phi_weight(&self, b: usize) -> DominantWeight {
        DominantWeight::new(self.phi[0][b], self.phi[1][b])
    }

    /// Checks the crystal axioms the rest of the crate relies on.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let bad = |m: String| Err(Error::MalformedCrystal(m));
        for i in COLORS {
            for b in 0..n {
                if let Some(t) = self.f(i, b) {
                    if self.f_arrows[i].iter().filter(|&&x| x == Some(t)).count() != 1 {
                        return bad(format!("f_{i} is not injective at {t}"));
                    }
                    if self.eps[i][t] != self.eps[i][b] + 1 || self.phi[i][t] + 1 != self.phi[i][b]
                    {
                        return bad(format!("eps/phi_{i} inconsistent along {b} -> {t}"));
                    }
                }
                let diff = self.phi[i][b] as i64 - self.eps[i][b] as i64;
                if diff != self.weights[b][i] {
                    return bad(format!("phi_{i} - eps_{i} != <h_{i}, wt> at {b}"));
                }
                // the string through b has length eps + phi
                let mut len = 0;
                let mut cur = b;
                while let Some(next) = self.f(i, cur) {
                    cur = next;
                    len += 1;
                }
                if len != self.phi[i][b] {
                    return bad(format!("phi_{i}({b}) does not match the f_{i}-string"));
                }
            }
        }
        if self.min_level() != self.level as i64 {
            return bad(format!("level is {} not {}", self.min_level(), self.level));
        }
        if let Some((a, b, i)) = self.energy_rule_violation() {
            return bad(format!("energy rule fails at e_{i}({a} ⊗ {b})"));
        }
        Ok(())
    }

    /// `min_b Σ a_i^∨ ε_i(b)`.
    pub fn min_level(&self) -> i64 {
        (0..self.size())
            .map(|b| {
                COLORS
                    .iter()
                    .map(|&i| self.comarks[i] * self.eps[i][b] as i64)
                    .sum::<i64>()
            })
            .min()
            .unwrap_or(0)
    }

    /// Exhaustive check of the energy function's defining property on
    /// `B ⊗ B`: `e_i` with `i != 0` leaves `H` unchanged, and `e_0` raises
    /// `H` by one when it acts on the left factor and lowers it by one on
    /// the right factor. Returns the first violation `(a, b, i)`.
    pub fn energy_rule_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.size() {
            for b in 0..self.size() {
                for i in COLORS {
                    let Some(word) = tensor_kashiwara(self, &[a, b], i, Direction::Raise) else {
                        continue;
                    };
                    let delta = self.energy(word[0], word[1]) - self.energy(a, b);
                    let expect = match (i, word[0] != a) {
                        (0, true) => 1,
                        (0, false) => -1,
                        _ => 0,
                    };
                    if delta != expect {
                        return Some((a, b, i));
                    }
                }
            }
        }
        None
    }

    /// Solves `φ(g1) = λ`, `φ(g_{k+1}) = ε(g_k)` and returns one period.
    pub fn ground_state(&self, lambda: DominantWeight) -> Result<GroundState> {
        if lambda.level(self) != self.level as i64 {
            return Err(Error::LevelMismatch(lambda.to_string(), self.level));
        }
        let solve = |w: DominantWeight| -> Result<usize> {
            let mut hits = (0..self.size()).filter(|&b| self.phi_weight(b) == w);
            match (hits.next(), hits.next()) {
                (Some(b), None) => Ok(b),
                _ => Err(Error::NoGroundElement(w.to_string())),
            }
        };
        let g1 = solve(lambda)?;
        let mut elements = vec![g1];
        loop {
            let next = solve(self.eps_weight(*elements.last().unwrap()))?;
            if next == g1 {
                break;
            }
            if elements.contains(&next) || elements.len() > self.size() {
                return Err(Error::MalformedCrystal(
                    "ground-state path is not periodic".into(),
                ));
            }
            elements.push(next);
        }
        Ok(GroundState { lambda, elements })
    }

    pub fn to_json(&self) -> CrystalJson {
        let mut arrows = Vec::new();
        for i in COLORS {
            for b in 0..self.size() {
                if let Some(t) = self.f(i, b) {
                    arrows.push(ArrowJson {
                        color: i,
                        from: self.labels[b].clone(),
                        to: self.labels[t].clone(),
                    });
                }
            }
        }
        CrystalJson {
            name: self.name.clone(),
            index_set: COLORS.to_vec(),
            elements: self.labels.clone(),
            arrows,
            eps: self.eps.to_vec(),
            phi: self.phi.to_vec(),
            classical_weights: self.weights.clone(),
            energy: self.energy.clone(),
            level: self.level,
            marks: self.marks.to_vec(),
            comarks: self.comarks.to_vec(),
            delta_height: self.delta_height(),
        }
    }
}

/// JSON document describing a crystal.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalJson {
    pub name: String,
    pub index_set: Vec<usize>,
    pub elements: Vec<String>,
    /// `f_i` arrows.
    pub arrows: Vec<ArrowJson>,
    pub eps: Vec<Vec<u32>>,
    pub phi: Vec<Vec<u32>>,
    pub classical_weights: Vec<[i64; 2]>,
    pub energy: Vec<Vec<i64>>,
    pub level: u32,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub delta_height: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowJson {
    pub color: usize,
    pub from: String,
    pub to: String,
}

/// `k0 Λ0 + k1 Λ1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    pub k: [u32; 2],
}

impl DominantWeight {
    pub const fn new(k0: u32, k1: u32) -> Self {
        DominantWeight { k: [k0, k1] }
    }

    /// `3Λ0`.
    pub const THREE_L0: DominantWeight = DominantWeight::new(3, 0);
    /// `2Λ0 + Λ1`.
    pub const TWO_L0_L1: DominantWeight = DominantWeight::new(2, 1);

    /// `Σ a_i^∨ k_i`.
    pub fn level(&self, spec: &PerfectCrystalSpec) -> i64 {
        COLORS
            .iter()
            .map(|&i| spec.comarks[i] * self.k[i] as i64)
            .sum()
    }

    pub fn affine(&self) -> AffineWeight {
        [self.k[0] as i64, self.k[1] as i64, 0]
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &k) in self.k.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(format!("L{i}")),
                _ => parts.push(format!("{k}L{i}")),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl FromStr for DominantWeight {
    type Err = String;

    /// Parses forms like `3L0`, `2L0+L1`, `L0+2L1`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut k = [0u32; 2];
        for term in s.split('+').map(str::trim) {
            let pos = term
                .find('L')
                .ok_or_else(|| format!("bad weight term `{term}`"))?;
            let coeff = if pos == 0 {
                1
            } else {
                term[..pos]
                    .parse()
                    .map_err(|_| format!("bad coefficient in `{term}`"))?
            };
            let idx: usize = term[pos + 1..]
                .parse()
                .map_err(|_| format!("bad index in `{term}`"))?;
            if idx > 1 {
                return Err(format!("index {idx} out of range"));
            }
            k[idx] += coeff;
        }
        Ok(DominantWeight { k })
    }
}

/// The periodic ground-state path `... ⊗ g2 ⊗ g1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundState {
    pub lambda: DominantWeight,
    /// `g1, ..., gd`.
    pub elements: Vec<usize>,
}

impl GroundState {
    pub fn period(&self) -> usize {
        self.elements.len()
    }

    /// `g_k` for `k >= 1`.
    pub fn at(&self, k: usize) -> usize {
        debug_assert!(k >= 1);
        self.elements[(k - 1) % self.elements.len()]
    }
}

/// Applies `e_i` or `f_i` to a finite tensor word by the signature rule.
///
/// `word` lists the factors left to right, so a path segment
/// `b_L ⊗ ... ⊗ b_1` is passed as `[b_L, ..., b_1]`. Each factor
/// contributes `ε_i` minus signs followed by `φ_i` plus signs; adjacent
/// `+ -` pairs cancel. `f_i` acts on the factor holding the leftmost
/// surviving `+`, `e_i` on the factor holding the rightmost surviving `-`.
/// Returns `None` when the operator kills the word.
pub fn tensor_kashiwara(
    spec: &PerfectCrystalSpec,
    word: &[usize],
    i: usize,
    dir: Direction,
) -> Option<Vec<usize>> {
    let pos = signature_target(spec, word, i, dir)?;
    let mut out = word.to_vec();
    out[pos] = spec.apply(i, dir, word[pos])?;
    Some(out)
}

/// Position in `word` the operator would act on, per the signature rule.
pub fn signature_target(
    spec: &PerfectCrystalSpec,
    word: &[usize],
    i: usize,
    dir: Direction,
) -> Option<usize> {
    match headed_signature_target(spec, 0, word, i, dir)? {
        SignatureHit::Factor(pos) => Some(pos),
        SignatureHit::Head => None,
    }
}

/// Where a Kashiwara operator lands on `u ⊗ word`, with `u` a highest
/// weight head factor contributing `head_plus` plus signs and no minuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureHit {
    Head,
    Factor(usize),
}

/// Signature rule on `u ⊗ word`; see [`SignatureHit`]. `None` when the
/// operator kills the tensor product.
pub fn headed_signature_target(
    spec: &PerfectCrystalSpec,
    head_plus: u32,
    word: &[usize],
    i: usize,
    dir: Direction,
) -> Option<SignatureHit> {
    // reduced signature as (slot, count) runs; slot 0 is the head
    let mut minuses: Vec<(usize, u32)> = Vec::new();
    let mut pluses: Vec<(usize, u32)> = Vec::new();
    if head_plus > 0 {
        pluses.push((0, head_plus));
    }
    for (pos, &b) in word.iter().enumerate() {
        let mut m = spec.eps[i][b];
        while m > 0 {
            match pluses.last_mut() {
                Some(top) => {
                    let c = top.1.min(m);
                    top.1 -= c;
                    m -= c;
                    if top.1 == 0 {
                        pluses.pop();
                    }
                }
                None => {
                    minuses.push((pos + 1, m));
                    m = 0;
                }
            }
        }
        let p = spec.phi[i][b];
        if p > 0 {
            pluses.push((pos + 1, p));
        }
    }
    let slot = match dir {
        Direction::Lower => pluses.first()?.0,
        Direction::Raise => minuses.last()?.0,
    };
    Some(match slot {
        0 => SignatureHit::Head,
        s => SignatureHit::Factor(s - 1),
    })
}

/// Sum of classical weights of a word.
pub fn word_weight(spec: &PerfectCrystalSpec, word: &[usize]) -> [i64; 2] {
    word.iter().fold([0, 0], |acc, &b| {
        [acc[0] + spec.weights[b][0], acc[1] + spec.weights[b][1]]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b13_tables() {
        let b = PerfectCrystalSpec::b13();
        b.validate().unwrap();
        assert_eq!(b.energy(3, 0), 0);
        assert_eq!(b.energy(0, 3), -3);
        assert_eq!(b.energy(2, 1), -1);
        assert_eq!(b.level, 3);
        assert_eq!(b.delta_height(), 2);
    }

    #[test]
    fn weight_matches_phi_minus_eps() {
        let b = PerfectCrystalSpec::b13();
        for k in 0..4 {
            for i in COLORS {
                assert_eq!(b.phi[i][k] as i64 - b.eps[i][k] as i64, b.weights[k][i]);
            }
        }
    }

    #[test]
    fn energy_rule_is_exhaustively_satisfied() {
        assert_eq!(PerfectCrystalSpec::b13().energy_rule_violation(), None);
    }

    #[test]
    fn shifted_energy_table_breaks_validation() {
        let mut b = PerfectCrystalSpec::b13();
        b.energy[1][2] += 1;
        assert!(matches!(b.validate(), Err(Error::MalformedCrystal(_))));
    }

    #[test]
    fn ground_states() {
        let b = PerfectCrystalSpec::b13();
        let g = b.ground_state(DominantWeight::THREE_L0).unwrap();
        assert_eq!((g.period(), g.elements.clone()), (2, vec![3, 0]));
        let g = b.ground_state(DominantWeight::TWO_L0_L1).unwrap();
        assert_eq!((g.period(), g.elements.clone()), (2, vec![2, 1]));
        let g = b.ground_state(DominantWeight::new(0, 3)).unwrap();
        assert_eq!((g.period(), g.elements.clone()), (2, vec![0, 3]));
        assert_eq!(g.at(5), 0);
    }

    #[test]
    fn level_mismatch() {
        let b = PerfectCrystalSpec::b13();
        assert!(matches!(
            b.ground_state(DominantWeight::new(2, 0)),
            Err(Error::LevelMismatch(_, 3))
        ));
    }

    #[test]
    fn signature_rule_examples() {
        let b = PerfectCrystalSpec::b13();
        // (b2, b1) = (0, 3): f_0 acts on b1
        assert_eq!(
            tensor_kashiwara(&b, &[0, 3], 0, Direction::Lower),
            Some(vec![0, 2])
        );
        assert_eq!(tensor_kashiwara(&b, &[3], 1, Direction::Lower), None);
        for k in 0..3 {
            let down = tensor_kashiwara(&b, &[k], 1, Direction::Lower).unwrap();
            assert_eq!(
                tensor_kashiwara(&b, &down, 1, Direction::Raise),
                Some(vec![k])
            );
        }
    }

    #[test]
    fn operators_shift_weight_by_simple_roots() {
        let b = PerfectCrystalSpec::b13();
        let words: Vec<Vec<usize>> = (0..64).map(|n| vec![n / 16, (n / 4) % 4, n % 4]).collect();
        for w in &words {
            let wt = word_weight(&b, w);
            for i in COLORS {
                let alpha = b.simple_roots[i];
                if let Some(v) = tensor_kashiwara(&b, w, i, Direction::Lower) {
                    let nw = word_weight(&b, &v);
                    assert_eq!([nw[0] - wt[0], nw[1] - wt[1]], [-alpha[0], -alpha[1]]);
                    assert_eq!(
                        tensor_kashiwara(&b, &v, i, Direction::Raise).as_ref(),
                        Some(w)
                    );
                }
            }
        }
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(
            "3L0".parse::<DominantWeight>().unwrap(),
            DominantWeight::THREE_L0
        );
        assert_eq!(
            "2L0+L1".parse::<DominantWeight>().unwrap(),
            DominantWeight::TWO_L0_L1
        );
        assert_eq!(DominantWeight::TWO_L0_L1.to_string(), "2L0+L1");
        assert!("3L2".parse::<DominantWeight>().is_err());
    }
}
