//! The vector representation `V(Λ_1)` of `sp(2r, C)`, its wedge powers and
//! the contravariant pairing.
//!
//! Basis vectors are indexed by [`JIndex`] in the order
//! `1 < … < r < r̄ < … < 1̄`; matrix row/column `p` is the basis vector at
//! position `p` of that order. Column `c` of an operator holds the image of
//! basis vector `c`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::weyl_word::JIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("letter {i} out of range 1..={r}")]
    BadLetter { i: u32, r: u32 },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("parameter is not invertible")]
    NotInvertible,
}

/// Coefficient ring for operators and wedge vectors.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Add<Output = Self> + Mul<Output = Self>
{
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn try_inv(&self) -> Option<Self>;
}

impl Scalar for LaurentPoly {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn try_inv(&self) -> Option<Self> {
        self.inverse()
    }
}

impl Scalar for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Integer power with negative exponents through `try_inv`.
pub fn spow<C: Scalar>(c: &C, e: i32) -> Result<C, RepError> {
    let base = if e < 0 { c.try_inv().ok_or(RepError::NotInvertible)? } else { c.clone() };
    let mut acc = C::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul_ref(&base);
    }
    Ok(acc)
}

/// Weight of a basis vector in fundamental-weight coordinates:
/// `wt(v_j) = Λ_j - Λ_{j-1}`, `wt(v_j̄) = Λ_{j-1} - Λ_j`, with `Λ_0 = 0`.
pub fn weight(j: JIndex, r: u32) -> Vec<i32> {
    let mut w = vec![0; r as usize];
    let a = j.abs() as usize;
    let sign = if j.is_barred() { -1 } else { 1 };
    w[a - 1] += sign;
    if a >= 2 {
        w[a - 2] -= sign;
    }
    w
}

/// `⟨h_i, wt(v_j)⟩`.
pub fn coweight_pairing(i: u32, j: JIndex, r: u32) -> i32 {
    weight(j, r)[(i - 1) as usize]
}

/// Cartan matrix of type `C_r` with `a_{r-1,r} = -2`.
pub fn cartan(i: u32, j: u32, r: u32) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        if (i, j) == (r - 1, r) {
            -2
        } else {
            -1
        }
    } else {
        0
    }
}

/// A `2r × 2r` matrix acting on `V(Λ_1)`.
#[derive(Clone, PartialEq)]
pub struct RepOperator<C> {
    r: u32,
    entries: Vec<C>,
}

impl<C: Scalar> RepOperator<C> {
    fn check_letter(r: u32, i: u32) -> Result<(), RepError> {
        if (1..=r).contains(&i) {
            Ok(())
        } else {
            Err(RepError::BadLetter { i, r })
        }
    }

    pub fn zero(r: u32) -> Self {
        let n = 2 * r as usize;
        RepOperator { r, entries: vec![C::zero(); n * n] }
    }

    pub fn identity(r: u32) -> Self {
        let mut op = Self::zero(r);
        for p in 0..op.dim() {
            op.set(p, p, C::one());
        }
        op
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn dim(&self) -> usize {
        2 * self.r as usize
    }

    pub fn get(&self, row: usize, col: usize) -> &C {
        &self.entries[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: C) {
        let n = self.dim();
        self.entries[row * n + col] = v;
    }

    pub fn at(&self, row: JIndex, col: JIndex) -> &C {
        self.get(row.position(self.r), col.position(self.r))
    }

    fn set_j(&mut self, row: JIndex, col: JIndex, v: C) {
        let (a, b) = (row.position(self.r), col.position(self.r));
        self.set(a, b, v);
    }

    /// Pairs `(source, target)` with `f_i source = target`.
    fn lowering_pairs(r: u32, i: u32) -> Vec<(JIndex, JIndex)> {
        if i < r {
            vec![(JIndex::Plain(i), JIndex::Plain(i + 1)), (JIndex::Bar(i + 1), JIndex::Bar(i))]
        } else {
            vec![(JIndex::Plain(r), JIndex::Bar(r))]
        }
    }

    /// The Chevalley generator `e_i`.
    pub fn raising(r: u32, i: u32) -> Result<Self, RepError> {
        Self::check_letter(r, i)?;
        let mut op = Self::zero(r);
        for (src, dst) in Self::lowering_pairs(r, i) {
            op.set_j(src, dst, C::one());
        }
        Ok(op)
    }

    /// The Chevalley generator `f_i`.
    pub fn lowering(r: u32, i: u32) -> Result<Self, RepError> {
        Self::check_letter(r, i)?;
        let mut op = Self::zero(r);
        for (src, dst) in Self::lowering_pairs(r, i) {
            op.set_j(dst, src, C::one());
        }
        Ok(op)
    }

    /// `x_i(t) = exp(t e_i) = 1 + t e_i` (`e_i^2 = 0` on `V(Λ_1)`).
    pub fn x_plus(r: u32, i: u32, t: &C) -> Result<Self, RepError> {
        Ok(Self::identity(r).add(&Self::raising(r, i)?.scale(t)))
    }

    /// `y_i(t) = exp(t f_i) = 1 + t f_i`.
    pub fn y(r: u32, i: u32, t: &C) -> Result<Self, RepError> {
        Ok(Self::identity(r).add(&Self::lowering(r, i)?.scale(t)))
    }

    /// `α_i^∨(c) = c^{h_i}`, diagonal with entries `c^{⟨h_i, wt(v_j)⟩}`.
    pub fn coroot(r: u32, i: u32, c: &C) -> Result<Self, RepError> {
        Self::check_letter(r, i)?;
        let mut op = Self::zero(r);
        for j in JIndex::all(r) {
            op.set_j(j, j, spow(c, coweight_pairing(i, j, r))?);
        }
        Ok(op)
    }

    /// Torus element `Π_i α_i^∨(c_i)`.
    pub fn torus(r: u32, cs: &[C]) -> Result<Self, RepError> {
        if cs.len() != r as usize {
            return Err(RepError::SizeMismatch { expected: r as usize, got: cs.len() });
        }
        let mut op = Self::zero(r);
        for j in JIndex::all(r) {
            let mut v = C::one();
            for (idx, c) in cs.iter().enumerate() {
                v = v.mul_ref(&spow(c, coweight_pairing(idx as u32 + 1, j, r))?);
            }
            op.set_j(j, j, v);
        }
        Ok(op)
    }

    /// `x_{-i}(t) = y_i(t) α_i^∨(t^{-1})`, written out entry by entry:
    /// `v_i ↦ t^{-1} v_i + v_{i+1}`, `v_{i+1} ↦ t v_{i+1}`,
    /// `v_{\overline{i+1}} ↦ t^{-1} v_{\overline{i+1}} + v_ī`, `v_ī ↦ t v_ī`,
    /// where `v_{r+1}` means `v_r̄`.
    pub fn x_minus(r: u32, i: u32, t: &C) -> Result<Self, RepError> {
        Self::check_letter(r, i)?;
        let tinv = t.try_inv().ok_or(RepError::NotInvertible)?;
        let mut op = Self::identity(r);
        if i < r {
            let (a, b) = (JIndex::Plain(i), JIndex::Plain(i + 1));
            let (ab, bb) = (JIndex::Bar(i + 1), JIndex::Bar(i));
            op.set_j(a, a, tinv.clone());
            op.set_j(b, a, C::one());
            op.set_j(b, b, t.clone());
            op.set_j(ab, ab, tinv);
            op.set_j(bb, ab, C::one());
            op.set_j(bb, bb, t.clone());
        } else {
            let (a, b) = (JIndex::Plain(r), JIndex::Bar(r));
            op.set_j(a, a, tinv);
            op.set_j(b, a, C::one());
            op.set_j(b, b, t.clone());
        }
        Ok(op)
    }

    /// The Weyl representative `s̄_i`, from its action on basis vectors.
    pub fn sbar(r: u32, i: u32) -> Result<Self, RepError> {
        Self::check_letter(r, i)?;
        let mut op = Self::identity(r);
        let pairs = if i < r {
            vec![(JIndex::Plain(i), JIndex::Plain(i + 1)), (JIndex::Bar(i + 1), JIndex::Bar(i))]
        } else {
            vec![(JIndex::Plain(r), JIndex::Bar(r))]
        };
        for (a, b) in pairs {
            // a ↦ b, b ↦ -a
            op.set_j(a, a, C::zero());
            op.set_j(b, b, C::zero());
            op.set_j(b, a, C::one());
            op.set_j(a, b, -C::one());
        }
        Ok(op)
    }

    pub fn scale(&self, t: &C) -> Self {
        RepOperator { r: self.r, entries: self.entries.iter().map(|e| e.mul_ref(t)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        RepOperator {
            r: self.r,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(self.r);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(self.r);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_lower_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<C> {
        (0..self.dim()).map(|p| self.get(p, p).clone()).collect()
    }

    /// Non-zero entries `(row, value)` of column `col`.
    fn column(&self, col: usize) -> Vec<(usize, &C)> {
        (0..self.dim()).map(|row| (row, self.get(row, col))).filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Entrywise map into another coefficient ring.
    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> RepOperator<D> {
        RepOperator { r: self.r, entries: self.entries.iter().map(f).collect() }
    }
}

impl<C: Scalar> fmt::Debug for RepOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        writeln!(f, "RepOperator(r = {})", self.r)?;
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| format!("{:?}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// An element of `∧^d V(Λ_1)` in the basis of sorted wedges.
#[derive(Clone, PartialEq, Debug)]
pub struct WedgeVector<C> {
    r: u32,
    d: usize,
    coords: BTreeMap<Vec<JIndex>, C>,
}

/// Sorts `t` in place and returns the sign of the sorting permutation, or
/// `None` when `t` has a repeated entry.
pub fn sort_with_sign(t: &mut [JIndex]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && t[j - 1] == t[j] {
            return None;
        }
    }
    Some(sign)
}

impl<C: Scalar> WedgeVector<C> {
    pub fn zero(r: u32, d: usize) -> Self {
        WedgeVector { r, d, coords: BTreeMap::new() }
    }

    /// `v_{t_1} ∧ … ∧ v_{t_d}` for an arbitrary tuple; normalised by sorting.
    pub fn basis(r: u32, t: &[JIndex]) -> Self {
        let mut w = Self::zero(r, t.len());
        w.add_basis(t, C::one());
        w
    }

    /// `v_1 ∧ … ∧ v_d`.
    pub fn highest(r: u32, d: u32) -> Self {
        let t: Vec<JIndex> = (1..=d).map(JIndex::Plain).collect();
        Self::basis(r, &t)
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Drops every coordinate whose key fails `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&[JIndex]) -> bool) {
        self.coords.retain(|k, _| keep(k));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<JIndex>, &C)> {
        self.coords.iter()
    }

    pub fn coeff(&self, t: &[JIndex]) -> C {
        self.coords.get(t).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c · (v_{t_1} ∧ … ∧ v_{t_d})`, sorting `t` with sign.
    pub fn add_basis(&mut self, t: &[JIndex], c: C) {
        let mut key = t.to_vec();
        let Some(sign) = sort_with_sign(&mut key) else {
            return;
        };
        let c = if sign < 0 { -c } else { c };
        self.add_sorted(key, &c);
    }

    fn add_sorted(&mut self, key: Vec<JIndex>, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RepError> {
        if self.d != other.d {
            return Err(RepError::SizeMismatch { expected: self.d, got: other.d });
        }
        let mut out = self.clone();
        for (k, c) in &other.coords {
            out.add_sorted(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.r, self.d);
        for (k, v) in &self.coords {
            out.add_sorted(k.clone(), &v.mul_ref(c));
        }
        out
    }

    /// `g(w_1 ∧ … ∧ w_d) = g w_1 ∧ … ∧ g w_d`, expanded multilinearly.
    pub fn apply(&self, op: &RepOperator<C>) -> Result<Self, RepError> {
        if op.rank() != self.r {
            return Err(RepError::SizeMismatch { expected: self.r as usize, got: op.rank() as usize });
        }
        let columns: Vec<Vec<(usize, &C)>> = (0..op.dim()).map(|c| op.column(c)).collect();
        let mut out = Self::zero(self.r, self.d);
        let mut rows = Vec::with_capacity(self.d);
        for (key, c) in &self.coords {
            let cols: Vec<usize> = key.iter().map(|j| j.position(self.r)).collect();
            expand(&columns, &cols, 0, &mut rows, c.clone(), self.r, &mut out);
        }
        Ok(out)
    }

    /// Checked variant of [`apply`](Self::apply) for a declared degree.
    pub fn apply_wedge(op: &RepOperator<C>, w: &Self, d: usize) -> Result<Self, RepError> {
        if w.d != d {
            return Err(RepError::SizeMismatch { expected: d, got: w.d });
        }
        w.apply(op)
    }

    /// `⟨w1, w2⟩` with the sorted basis wedges orthonormal.
    pub fn pairing(&self, other: &Self) -> Result<C, RepError> {
        if self.d != other.d {
            return Err(RepError::SizeMismatch { expected: self.d, got: other.d });
        }
        let mut acc = C::zero();
        for (k, a) in &self.coords {
            if let Some(b) = other.coords.get(k) {
                acc.add_assign_ref(&a.mul_ref(b));
            }
        }
        Ok(acc)
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> WedgeVector<D> {
        let mut out = WedgeVector::zero(self.r, self.d);
        for (k, v) in &self.coords {
            out.add_sorted(k.clone(), &f(v));
        }
        out
    }
}

fn expand<C: Scalar>(
    columns: &[Vec<(usize, &C)>],
    cols: &[usize],
    depth: usize,
    rows: &mut Vec<usize>,
    coeff: C,
    r: u32,
    out: &mut WedgeVector<C>,
) {
    if depth == cols.len() {
        let mut t: Vec<JIndex> = rows.iter().map(|&p| JIndex::from_position(p, r)).collect();
        if let Some(sign) = sort_with_sign(&mut t) {
            let c = if sign < 0 { -coeff } else { coeff };
            out.add_sorted(t, &c);
        }
        return;
    }
    for &(row, v) in &columns[cols[depth]] {
        if rows.contains(&row) {
            continue;
        }
        rows.push(row);
        expand(columns, cols, depth + 1, rows, coeff.mul_ref(v), r, out);
        rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{Monomial, VarIndex};
    use JIndex::{Bar, Plain};

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn ypoly(s: u32, l: u32) -> LaurentPoly {
        LaurentPoly::var(VarIndex::new(s, l))
    }

    fn image<C: Scalar>(op: &RepOperator<C>, j: JIndex) -> WedgeVector<C> {
        WedgeVector::basis(op.rank(), &[j]).apply(op).unwrap()
    }

    #[test]
    fn x_minus_action() {
        let yv = ypoly(1, 1);
        let yi = yv.inverse().unwrap();
        let op = RepOperator::x_minus(3, 1, &yv).unwrap();
        let mut expect = WedgeVector::basis(3, &[Plain(1)]).scale(&yi);
        expect.add_basis(&[Plain(2)], LaurentPoly::one());
        assert_eq!(image(&op, Plain(1)), expect);
        assert_eq!(image(&op, Plain(2)), WedgeVector::basis(3, &[Plain(2)]).scale(&yv));

        let op = RepOperator::x_minus(3, 3, &yv).unwrap();
        let mut expect = WedgeVector::basis(3, &[Plain(3)]).scale(&yi);
        expect.add_basis(&[Bar(3)], LaurentPoly::one());
        assert_eq!(image(&op, Plain(3)), expect);

        let op = RepOperator::x_minus(3, 2, &yv).unwrap();
        assert_eq!(image(&op, Plain(1)), WedgeVector::basis(3, &[Plain(1)]));
        assert!(matches!(RepOperator::x_minus(3, 4, &yv), Err(RepError::BadLetter { .. })));
    }

    #[test]
    fn x_minus_factorises_through_y_and_coroot() {
        for r in 1..=5 {
            for i in 1..=r {
                let t = q(7) / q(3);
                let lhs = RepOperator::x_minus(r, i, &t).unwrap();
                let rhs = RepOperator::y(r, i, &t).unwrap().compose(&RepOperator::coroot(r, i, &t.recip()).unwrap());
                assert_eq!(lhs, rhs, "r={r} i={i}");
            }
        }
    }

    #[test]
    fn x_minus_is_lower_triangular_with_expected_diagonal() {
        for r in 1..=6 {
            for i in 1..=r {
                let t = q(5);
                let op = RepOperator::x_minus(r, i, &t).unwrap();
                assert!(op.is_lower_triangular());
                for j in JIndex::all(r) {
                    let expect = match j {
                        Plain(a) if a == i => t.recip(),
                        Bar(a) if a == i + 1 && i < r => t.recip(),
                        Plain(a) if a == i + 1 => t.clone(),
                        Bar(a) if a == i => t.clone(),
                        _ => q(1),
                    };
                    assert_eq!(op.at(j, j), &expect, "r={r} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn sbar_table_matches_product() {
        for r in 1..=6 {
            for i in 1..=r {
                let table = RepOperator::<Q>::sbar(r, i).unwrap();
                let xm = RepOperator::x_plus(r, i, &q(-1)).unwrap();
                let prod = xm.compose(&RepOperator::y(r, i, &q(1)).unwrap()).compose(&xm);
                assert_eq!(table, prod, "r={r} i={i}");
            }
        }
        let sr = RepOperator::<Q>::sbar(3, 3).unwrap();
        assert_eq!(image(&sr, Plain(3)), WedgeVector::basis(3, &[Bar(3)]));
        let s1 = RepOperator::<Q>::sbar(3, 1).unwrap();
        assert_eq!(image(&s1, Plain(3)), WedgeVector::basis(3, &[Plain(3)]));
    }

    #[test]
    fn wedge_cross_terms_cancel() {
        let c = ypoly(2, 1);
        let op = RepOperator::x_minus(3, 1, &c).unwrap();
        let w = WedgeVector::highest(3, 2);
        assert_eq!(w.apply(&op).unwrap(), w);
        assert_eq!(w.apply(&RepOperator::identity(3)).unwrap(), w);
    }

    #[test]
    fn wedge_lowering_of_last_factor() {
        for r in 2..=5u32 {
            for d in 1..=r {
                let t = ypoly(1, d);
                let op = RepOperator::x_minus(r, d, &t).unwrap();
                let got = WedgeVector::highest(r, d).apply(&op).unwrap();
                let mut expect = WedgeVector::highest(r, d).scale(&t.inverse().unwrap());
                let mut tail: Vec<JIndex> = (1..d).map(Plain).collect();
                tail.push(if d < r { Plain(d + 1) } else { Bar(r) });
                expect.add_basis(&tail, LaurentPoly::one());
                assert_eq!(got, expect, "r={r} d={d}");
            }
        }
    }

    #[test]
    fn sort_sign() {
        let mut t = vec![Bar(1), Plain(2), Plain(1)];
        assert_eq!(sort_with_sign(&mut t), Some(-1));
        assert_eq!(t, vec![Plain(1), Plain(2), Bar(1)]);
        let mut t = vec![Plain(2), Plain(1), Plain(2)];
        assert_eq!(sort_with_sign(&mut t), None);
    }

    #[test]
    fn pairing_basics() {
        let a = WedgeVector::<Q>::basis(3, &[Plain(1), Plain(2)]);
        let b = WedgeVector::<Q>::basis(3, &[Plain(1), Plain(3)]);
        assert_eq!(a.pairing(&a).unwrap(), q(1));
        assert_eq!(a.pairing(&b).unwrap(), q(0));
        let c = WedgeVector::<Q>::basis(3, &[Plain(1)]);
        assert!(matches!(a.pairing(&c), Err(RepError::SizeMismatch { .. })));
        assert!(WedgeVector::apply_wedge(&RepOperator::identity(3), &a, 1).is_err());
    }

    #[test]
    fn coroot_scales_by_weight() {
        let r = 4;
        let c = q(3);
        for i in 1..=r {
            let op = RepOperator::coroot(r, i, &c).unwrap();
            for j in JIndex::all(r) {
                let e = coweight_pairing(i, j, r);
                assert_eq!(op.at(j, j), &spow(&c, e).unwrap());
            }
        }
        assert_eq!(weight(Plain(1), 3), vec![1, 0, 0]);
        assert_eq!(weight(Bar(2), 3), vec![1, -1, 0]);
    }

    #[test]
    fn symbolic_map_to_rational() {
        let op = RepOperator::x_minus(2, 1, &ypoly(1, 1)).unwrap();
        let point = [(VarIndex::new(1, 1), q(2))].into_iter().collect();
        let num = op.map(|p| p.eval(&point).unwrap());
        assert_eq!(num, RepOperator::x_minus(2, 1, &q(2)).unwrap());
        let _ = Monomial::one();
    }
}
