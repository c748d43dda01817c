//! Reference computations of `Δ^L(k;i)` and `Δ^G(k;i)`: matrix coefficients
//! in `∧^d V(Λ_1)`, a memoized level recurrence, and the frozen minors.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Monomial, VarIndex};
use crate::paths::{edge_label, successors, PathError, PathParams, PathVertex};
use crate::rep::{weight, RepError, RepOperator, WedgeVector};
use crate::weyl_word::{target_tuple, CWord, JIndex, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("torus exponents have length {got}, expected {expected}")]
    TorusLength { expected: usize, got: usize },
}

/// `a = t^{Σ a_i h_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TorusExponents {
    pub a: Vec<i64>,
}

impl TorusExponents {
    pub fn new(a: Vec<i64>) -> Self {
        TorusExponents { a }
    }

    pub fn zero(r: u32) -> Self {
        TorusExponents { a: vec![0; r as usize] }
    }

    /// `a_i`, with `a_0 = 0`.
    pub fn get(&self, i: u32) -> i64 {
        if i == 0 {
            0
        } else {
            self.a[(i - 1) as usize]
        }
    }

    /// `⟨Σ a_i h_i, μ⟩` for a weight in fundamental-weight coordinates.
    pub fn pair(&self, wt: &[i32]) -> i64 {
        self.a.iter().zip(wt).map(|(a, w)| a * *w as i64).sum()
    }
}

/// `Δ^G = t^{torus_exponent} · value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorResult {
    pub value: LaurentPoly,
    pub torus_exponent: i64,
}

fn y(s: u32, l: u32) -> LaurentPoly {
    LaurentPoly::var(VarIndex::new(s, l))
}

/// `x_{-j_1}(t_1) ⋯ x_{-j_n}(t_n) · w`, rightmost factor first.
pub fn apply_factors(
    r: u32,
    factors: &[(u32, LaurentPoly)],
    w: &WedgeVector<LaurentPoly>,
) -> Result<WedgeVector<LaurentPoly>, MinorError> {
    let mut cur = w.clone();
    for (letter, t) in factors.iter().rev() {
        cur = cur.apply(&RepOperator::x_minus(r, *letter, t)?)?;
    }
    Ok(cur)
}

/// `(letter, Y[s,letter])` for every position of `w`.
pub fn word_factors(w: &CWord) -> Vec<(u32, LaurentPoly)> {
    w.positions().map(|(s, l)| (l, y(s, l))).collect()
}

/// `x_{-j_1}(t_1) ⋯ x_{-j_n}(t_n)(v_1 ∧ … ∧ v_d)`, keeping only the
/// coordinates whose weight can still be lowered to that of `target`.
pub fn pruned_image(
    r: u32,
    factors: &[(u32, LaurentPoly)],
    d: u32,
    target: &[JIndex],
) -> Result<WedgeVector<LaurentPoly>, MinorError> {
    let goal = eps_weight(r, target);
    // remaining[i-1]: factors with letter i still to be applied
    let mut remaining = vec![0i64; r as usize];
    for (letter, _) in factors {
        remaining[*letter as usize - 1] += 1;
    }
    let mut cur = WedgeVector::highest(r, d);
    cur.retain(|key| can_reach(&eps_weight(r, key), &goal, &remaining, d as i64));
    for (letter, t) in factors.iter().rev() {
        cur = cur.apply(&RepOperator::x_minus(r, *letter, t)?)?;
        remaining[*letter as usize - 1] -= 1;
        cur.retain(|key| can_reach(&eps_weight(r, key), &goal, &remaining, d as i64));
    }
    Ok(cur)
}

/// `⟨x_{-j_1}(t_1) ⋯ x_{-j_n}(t_n)(v_1 ∧ … ∧ v_d), v_target⟩`.
pub fn wedge_minor(
    r: u32,
    factors: &[(u32, LaurentPoly)],
    d: u32,
    target: &[JIndex],
) -> Result<LaurentPoly, MinorError> {
    let img = pruned_image(r, factors, d, target)?;
    Ok(img.pairing(&WedgeVector::basis(r, target))?)
}

/// Weight of a wedge of basis vectors in the `ε` basis.
fn eps_weight(r: u32, key: &[JIndex]) -> Vec<i64> {
    let mut e = vec![0i64; r as usize];
    for j in key {
        let sign = if j.is_barred() { -1 } else { 1 };
        e[j.abs() as usize - 1] += sign;
    }
    e
}

/// Whether `from - to = Σ c_i α_i` with `0 <= c_i <= d·remaining_i`; each
/// factor lowers the weight by at most `d` copies of its simple root.
fn can_reach(from: &[i64], to: &[i64], remaining: &[i64], d: i64) -> bool {
    let r = from.len();
    let mut partial = 0;
    for i in 0..r {
        partial += from[i] - to[i];
        let c = if i + 1 < r {
            partial
        } else if partial % 2 == 0 {
            partial / 2
        } else {
            return false;
        };
        if c < 0 || c > d * remaining[i] {
            return false;
        }
    }
    true
}

/// `Δ^L(k;i)` as a matrix coefficient, on the word truncated at the last
/// occurrence of `i_k`.
pub fn minor_l_oracle(w: &CWord, k: usize) -> Result<LaurentPoly, MinorError> {
    let t = w.truncate_for(k)?;
    minor_l_oracle_untruncated(&t, k)
}

/// As [`minor_l_oracle`] but using every factor of `w`.
pub fn minor_l_oracle_untruncated(w: &CWord, k: usize) -> Result<LaurentPoly, MinorError> {
    let (mp, d) = w.locate(k)?;
    wedge_minor(w.rank(), &word_factors(w), d, &target_tuple(w.rank(), mp, d))
}

/// `Δ^L(k;i)` through the level recurrence
/// `(s; a) = Σ_{b connected to a} Q(a → b) · (s-1; b)`, `(0; b) = [b = target]`.
pub fn minor_l_dp(w: &CWord, k: usize) -> Result<LaurentPoly, MinorError> {
    let p = PathParams::for_position(w, k)?;
    let sink = p.sink();
    let mut memo: HashMap<PathVertex, LaurentPoly> = HashMap::new();
    fn value(
        v: &PathVertex,
        p: &PathParams,
        sink: &PathVertex,
        memo: &mut HashMap<PathVertex, LaurentPoly>,
    ) -> Result<LaurentPoly, MinorError> {
        if v.level == 0 {
            return Ok(if v == sink { LaurentPoly::one() } else { LaurentPoly::zero() });
        }
        if let Some(x) = memo.get(v) {
            return Ok(x.clone());
        }
        let mut acc = LaurentPoly::zero();
        for s in successors(p.r, v) {
            let sub = value(&s, p, sink, memo)?;
            if !sub.is_zero() {
                acc += &sub.mul_monomial(&edge_label(p.r, p.m, v, &s)?);
            }
        }
        memo.insert(v.clone(), acc.clone());
        Ok(acc)
    }
    value(&p.source(), &p, &sink, &mut memo)
}

/// `t`-exponent of `Δ^G(k;i)` relative to `Δ^L(k;i)`.
pub fn torus_exponent_formula(r: u32, mp: u32, d: u32, a: &TorusExponents) -> i64 {
    if mp + d > r {
        a.get(r) - a.get(mp) - a.get(d + mp - r)
    } else {
        a.get(mp + d) - a.get(mp)
    }
}

/// `Δ^G(k;i)(a, Y) = t^e Δ^L(k;i)(Y)`.
pub fn minor_g(w: &CWord, k: usize, a: &TorusExponents) -> Result<MinorResult, MinorError> {
    if a.a.len() != w.rank() as usize {
        return Err(MinorError::TorusLength { expected: w.rank() as usize, got: a.a.len() });
    }
    let (mp, d) = w.locate(k)?;
    Ok(MinorResult { value: minor_l_oracle(w, k)?, torus_exponent: torus_exponent_formula(w.rank(), mp, d, a) })
}

/// `⟨a · x^L(Y)(v_1 ∧ … ∧ v_d), v_target⟩` with `a` acting diagonally on every
/// basis wedge, collected by power of `t`.
pub fn minor_g_oracle(w: &CWord, k: usize, a: &TorusExponents) -> Result<BTreeMap<i64, LaurentPoly>, MinorError> {
    let r = w.rank();
    if a.a.len() != r as usize {
        return Err(MinorError::TorusLength { expected: r as usize, got: a.a.len() });
    }
    let t = w.truncate_for(k)?;
    let (mp, d) = t.locate(k)?;
    let target = target_tuple(r, mp, d);
    let img = pruned_image(r, &word_factors(&t), d, &target)?;
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (key, c) in img.iter() {
        let mut wt = vec![0i32; r as usize];
        for j in key {
            for (acc, x) in wt.iter_mut().zip(weight(*j, r)) {
                *acc += x;
            }
        }
        let e = a.pair(&wt);
        // the pairing against the target keeps only its own coordinate
        if *key == target {
            *out.entry(e).or_insert_with(LaurentPoly::zero) += c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `Δ_{Λ_j, Λ_j}(x^L(Y)) = Π_{s : j occurs in cycle s} Y[s,j]^{-1}`.
pub fn frozen_minor(w: &CWord, j: u32) -> Result<LaurentPoly, MinorError> {
    if j == 0 || j > w.rank() {
        return Err(WordError::BadLetter { i: j, r: w.rank() }.into());
    }
    let mono = Monomial::from_exponents(
        w.positions().filter(|&(_, l)| l == j).map(|(s, l)| (VarIndex::new(s, l), -1)),
    );
    Ok(LaurentPoly::monomial(mono))
}

/// The same principal minor as a pairing over the full word.
pub fn frozen_minor_oracle(w: &CWord, j: u32) -> Result<LaurentPoly, MinorError> {
    if j == 0 || j > w.rank() {
        return Err(WordError::BadLetter { i: j, r: w.rank() }.into());
    }
    let target: Vec<JIndex> = (1..=j).map(JIndex::Plain).collect();
    wedge_minor(w.rank(), &word_factors(w), j, &target)
}

/// `s̄_{i_1} ⋯ s̄_{i_k} (v_1 ∧ … ∧ v_d)` with `d = i_k`.
pub fn u_wedge(w: &CWord, k: usize) -> Result<WedgeVector<BigRational>, MinorError> {
    let (_, d) = w.locate(k)?;
    let r = w.rank();
    let letters = w.letters();
    let mut cur = WedgeVector::<BigRational>::highest(r, d);
    for &l in letters[..k].iter().rev() {
        cur = cur.apply(&RepOperator::sbar(r, l)?)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(r: u32, m: u32, last: u32) -> CWord {
        CWord::new(r, m, last).unwrap()
    }

    #[test]
    fn small_hand_values() {
        // (1,2,1), k = 3 lies in the last cycle
        assert_eq!(minor_l_oracle(&word(2, 2, 1), 3).unwrap(), LaurentPoly::one());
        let expect: LaurentPoly = "1*Y[2,1]^-1 + 1*Y[1,1]*Y[1,2]^-1".parse().unwrap();
        assert_eq!(minor_l_oracle(&word(2, 2, 2), 1).unwrap(), expect);
        assert_eq!(minor_l_dp(&word(2, 2, 2), 1).unwrap(), expect);
        assert_eq!(minor_l_dp(&word(2, 2, 1), 3).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn example_polynomial_has_a_double_term() {
        let w = word(3, 3, 2);
        let p = minor_l_oracle(&w, 5).unwrap();
        assert_eq!(p.num_terms(), 11);
        let m: LaurentPoly = "1*Y[1,2]*Y[2,2]^-1".parse().unwrap();
        assert_eq!(p.coeff(m.as_monomial().unwrap()), 2.into());
        assert_eq!(minor_l_dp(&w, 5).unwrap(), p);
    }

    #[test]
    fn torus_exponents() {
        let a = TorusExponents::new(vec![2, 5, 11]);
        assert_eq!(torus_exponent_formula(3, 2, 2, &a), 11 - 5 - 2);
        let a4 = TorusExponents::new(vec![2, 5, 11, 17]);
        assert_eq!(torus_exponent_formula(4, 1, 2, &a4), 11 - 2);
        let w = word(3, 3, 2);
        let g = minor_g(&w, 5, &TorusExponents::zero(3)).unwrap();
        assert_eq!(g.torus_exponent, 0);
        assert_eq!(g.value, minor_l_oracle(&w, 5).unwrap());
        let orc = minor_g_oracle(&w, 5, &a).unwrap();
        assert_eq!(orc.len(), 1);
        assert_eq!(orc.get(&4), Some(&g.value));
        assert!(minor_g(&w, 5, &TorusExponents::new(vec![1])).is_err());
    }

    #[test]
    fn frozen_examples() {
        assert_eq!(frozen_minor(&word(1, 1, 1), 1).unwrap().canonical_string(), "1*Y[1,1]^-1");
        let w = word(2, 2, 1);
        assert_eq!(frozen_minor(&w, 1).unwrap().canonical_string(), "1*Y[1,1]^-1*Y[2,1]^-1");
        assert_eq!(frozen_minor(&w, 2).unwrap().canonical_string(), "1*Y[1,2]^-1");
        for j in 1..=2 {
            assert_eq!(frozen_minor(&w, j).unwrap(), frozen_minor_oracle(&w, j).unwrap());
        }
        assert!(frozen_minor(&w, 3).is_err());
    }

    #[test]
    fn u_wedge_is_signed_target() {
        let w = word(3, 3, 2);
        for k in 1..=w.len() {
            let (mp, d) = w.locate(k).unwrap();
            assert_eq!(u_wedge(&w, k).unwrap(), WedgeVector::basis(3, &target_tuple(3, mp, d)));
        }
    }
}
