//! Truncated multivariate power series in the variables X, Y, Z.
//!
//! Series are truncated at a *total-degree* bound: every operation discards
//! monomials whose total degree exceeds the declared bound, and equality is
//! only defined between series declaring the same variable set and bound.
//! Coefficients are generic over [`Coeff`] so the same ring machinery runs
//! over exact rationals and over polynomials in abstract zeta symbols.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("degree bound mismatch: {left} vs {right}")]
    BoundMismatch { left: u32, right: u32 },
    #[error("variable set mismatch: {left} vs {right}")]
    VariableMismatch { left: VarSet, right: VarSet },
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("constant term must be zero")]
    NonzeroConstantTerm,
    #[error("constant term must be one")]
    ConstantTermNotOne,
    #[error("total degree {degree} exceeds bound {bound}")]
    DegreeOutOfBound { degree: u32, bound: u32 },
    #[error("not divisible: {0}")]
    DivisionFailure(String),
}

/// Coefficient ring for [`TruncatedSeries`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// Multiply by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse when the coefficient is a unit.
    fn inverse(&self) -> Option<Self>;
    /// Rendering usable as a multiplicand in the canonical text form.
    fn render(&self) -> String;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        Rational::inverse(self)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
            Var::Z => "Z",
        }
    }
}

/// Subset of {X, Y, Z} a series is declared over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VarSet(u8);

impl VarSet {
    pub const X: VarSet = VarSet(0b001);
    pub const XY: VarSet = VarSet(0b011);
    pub const XYZ: VarSet = VarSet(0b111);

    pub fn single(var: Var) -> VarSet {
        VarSet(1 << var.index())
    }

    pub fn from_vars(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |acc, v| acc | 1 << v.index()))
    }

    pub fn contains(self, var: Var) -> bool {
        self.0 & (1 << var.index()) != 0
    }

    fn admits(self, exps: &Exponents) -> bool {
        Var::ALL
            .iter()
            .all(|&v| exps.0[v.index()] == 0 || self.contains(v))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = Var::ALL
            .iter()
            .filter(|v| self.contains(**v))
            .map(|v| v.name())
            .collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Exponent triple (X, Y, Z), ordered graded-lexicographically: lower total
/// degree first, and within a degree X-dominant monomials first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(pub [u32; 3]);

impl Exponents {
    pub const CONSTANT: Exponents = Exponents([0, 0, 0]);

    pub fn of(var: Var) -> Exponents {
        let mut e = [0u32; 3];
        e[var.index()] = 1;
        Exponents(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for v in Var::ALL {
            let e = self.0[v.index()];
            match e {
                0 => {}
                1 => parts.push(v.name().to_string()),
                _ => parts.push(format!("{}^{}", v.name(), e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate power series truncated at a total-degree bound.
///
/// Coefficients are stored sparsely; absent entries are zero and stored zeros
/// are normalized away, so derived equality is canonical at a fixed bound.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C: Coeff = Rational> {
    vars: VarSet,
    bound: u32,
    coeffs: BTreeMap<Exponents, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(vars: VarSet, bound: u32) -> Self {
        TruncatedSeries { vars, bound, coeffs: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, bound: u32, value: C) -> Self {
        let mut s = Self::zero(vars, bound);
        s.insert_add(Exponents::CONSTANT, value);
        s
    }

    pub fn one(vars: VarSet, bound: u32) -> Self {
        Self::constant(vars, bound, C::one())
    }

    pub fn variable(vars: VarSet, bound: u32, var: Var) -> Self {
        Self::monomial(vars, bound, Exponents::of(var), C::one())
    }

    pub fn monomial(vars: VarSet, bound: u32, exps: Exponents, value: C) -> Self {
        assert!(vars.admits(&exps), "monomial uses a variable outside {vars}");
        assert!(exps.degree() <= bound, "monomial degree exceeds bound {bound}");
        let mut s = Self::zero(vars, bound);
        s.insert_add(exps, value);
        s
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.coeffs.iter()
    }

    pub fn constant_term(&self) -> C {
        self.coeffs
            .get(&Exponents::CONSTANT)
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// The coefficient at `exps`, or zero when absent.
    pub fn coefficient(&self, exps: Exponents) -> Result<C, SeriesError> {
        let degree = exps.degree();
        if degree > self.bound {
            return Err(SeriesError::DegreeOutOfBound { degree, bound: self.bound });
        }
        Ok(self.coeffs.get(&exps).cloned().unwrap_or_else(C::zero))
    }

    fn insert_add(&mut self, exps: Exponents, value: C) {
        if value.is_zero() || exps.degree() > self.bound {
            return;
        }
        match self.coeffs.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&value);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars != other.vars {
            return Err(SeriesError::VariableMismatch { left: self.vars, right: other.vars });
        }
        if self.bound != other.bound {
            return Err(SeriesError::BoundMismatch { left: self.bound, right: other.bound });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.insert_add(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.insert_add(*e, c.neg_ref());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars, self.bound);
        for (e, c) in &self.coeffs {
            out.coeffs.insert(*e, c.neg_ref());
        }
        out
    }

    /// Product with every monomial of total degree above the bound discarded.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.vars, self.bound);
        for (ea, ca) in &self.coeffs {
            if ea.degree() > self.bound {
                continue;
            }
            for (eb, cb) in &other.coeffs {
                let e = ea.mul(eb);
                if e.degree() > self.bound {
                    continue;
                }
                out.insert_add(e, ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.vars, self.bound);
        for (e, c) in &self.coeffs {
            out.insert_add(*e, c.scale(r));
        }
        out
    }

    /// Multiply every coefficient by a coefficient-ring element.
    pub fn mul_coeff(&self, k: &C) -> Self {
        let mut out = Self::zero(self.vars, self.bound);
        for (e, c) in &self.coeffs {
            out.insert_add(*e, c.mul_ref(k));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.vars, self.bound);
        for _ in 0..exp {
            acc = acc.try_mul(self).expect("compatible by construction");
        }
        acc
    }

    /// Multiplicative inverse up to the bound; the constant term must be a unit.
    pub fn try_invert(&self) -> Result<Self, SeriesError> {
        let c = self.constant_term();
        let c_inv = c.inverse().ok_or(SeriesError::NonUnitConstantTerm)?;
        // s = c (1 + u) with ord(u) >= 1; 1/s = (1/c) * sum_j (-u)^j via Horner.
        let mut u = self.mul_coeff(&c_inv);
        u.insert_add(Exponents::CONSTANT, C::one().neg_ref());
        let one = Self::one(self.vars, self.bound);
        let mut acc = one.clone();
        for _ in 0..self.bound {
            acc = one
                .try_sub(&u.try_mul(&acc).expect("compatible"))
                .expect("compatible");
        }
        Ok(acc.mul_coeff(&c_inv))
    }

    /// Exponential `sum_j s^j / j!`; requires a zero constant term.
    pub fn try_exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = Self::one(self.vars, self.bound);
        let mut power = Self::one(self.vars, self.bound);
        let mut factorial = Rational::one();
        for j in 1..=self.bound {
            power = power.try_mul(self).expect("compatible");
            factorial *= &Rational::from(i64::from(j));
            let inv = factorial.inverse().expect("factorial is nonzero");
            acc = acc.try_add(&power.scale(&inv)).expect("compatible");
        }
        Ok(acc)
    }

    /// Logarithm `-sum_j (1-s)^j / j`; requires constant term one. Inverse of
    /// [`TruncatedSeries::try_exp`] on its domain.
    pub fn try_log(&self) -> Result<Self, SeriesError> {
        if self.constant_term() != C::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let u = Self::one(self.vars, self.bound)
            .try_sub(self)
            .expect("compatible");
        let mut acc = Self::zero(self.vars, self.bound);
        let mut power = Self::one(self.vars, self.bound);
        for j in 1..=self.bound {
            power = power.try_mul(&u).expect("compatible");
            let inv = Rational::from(i64::from(j)).inverse().expect("nonzero");
            acc = acc.try_sub(&power.scale(&inv)).expect("compatible");
        }
        Ok(acc)
    }

    /// The same series re-declared at a lower bound, dropping higher terms.
    pub fn restricted(&self, new_bound: u32) -> Self {
        assert!(new_bound <= self.bound, "restricted can only lower the bound");
        let mut out = Self::zero(self.vars, new_bound);
        for (e, c) in &self.coeffs {
            out.insert_add(*e, c.clone());
        }
        out
    }

    /// Map coefficients into another ring, e.g. embedding rationals as
    /// constants of a larger ring.
    pub fn map_coeffs<C2: Coeff>(&self, f: impl Fn(&C) -> C2) -> TruncatedSeries<C2> {
        let mut out = TruncatedSeries::zero(self.vars, self.bound);
        for (e, c) in &self.coeffs {
            out.insert_add(*e, f(c));
        }
        out
    }

    /// Substitute `Z := X*Y`, truncating at the same bound.
    pub fn substitute_z_with_xy(&self) -> Self {
        let mut out = Self::zero(self.vars, self.bound);
        for (e, c) in &self.coeffs {
            let sub = Exponents([e.0[0] + e.0[2], e.0[1] + e.0[2], 0]);
            out.insert_add(sub, c.clone());
        }
        out
    }

    fn padded_to_bound(&self, bound: u32) -> Self {
        assert!(bound >= self.bound);
        let mut out = Self::zero(self.vars, bound);
        for (e, c) in &self.coeffs {
            out.insert_add(*e, c.clone());
        }
        out
    }

    /// Exact division by `Z - X*Y`.
    ///
    /// The numerator must be accurate to its full declared bound `B`; the
    /// quotient comes back at bound `B - 2` (division by a degree-2 element
    /// costs two degrees of accuracy). Fails with `DivisionFailure` when the
    /// numerator is not exactly divisible as far as the truncation can see.
    pub fn divide_by_z_minus_xy(&self) -> Result<Self, SeriesError> {
        assert!(self.vars == VarSet::XYZ, "division is defined over {{X,Y,Z}}");
        assert!(self.bound >= 2, "numerator bound must be at least 2");
        let target = self.bound - 2;

        // Divisibility itself: substituting Z = XY must annihilate the series
        // up to the full bound.
        if !self.substitute_z_with_xy().is_zero() {
            return Err(SeriesError::DivisionFailure(
                "substituting Z = X*Y does not annihilate the numerator".into(),
            ));
        }

        // Synthetic division on Z-coefficients: with F = sum_j F_j Z^j and
        // Q = sum_j Q_j Z^j, F = Q*(Z - XY) gives Q_j = F_{j+1} + XY*Q_{j+1},
        // solved top-down and truncated to the accuracy the quotient needs.
        let mut zparts: Vec<BTreeMap<[u32; 2], C>> = vec![BTreeMap::new(); self.bound as usize + 2];
        for (e, c) in &self.coeffs {
            zparts[e.0[2] as usize].insert([e.0[0], e.0[1]], c.clone());
        }

        let mut quotient = Self::zero(self.vars, target);
        let mut q_next: BTreeMap<[u32; 2], C> = BTreeMap::new();
        for j in (0..=target).rev() {
            let mut q_j: BTreeMap<[u32; 2], C> = BTreeMap::new();
            let max_xy_degree = target - j;
            for ([x, y], c) in &zparts[j as usize + 1] {
                if x + y <= max_xy_degree {
                    q_j.insert([*x, *y], c.clone());
                }
            }
            for ([x, y], c) in &q_next {
                let (x, y) = (x + 1, y + 1);
                if x + y > max_xy_degree {
                    continue;
                }
                match q_j.entry([x, y]) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c.clone());
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().add_ref(c);
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            e.insert(sum);
                        }
                    }
                }
            }
            for ([x, y], c) in &q_j {
                quotient.insert_add(Exponents([*x, *y, j]), c.clone());
            }
            q_next = q_j;
        }

        // Recomposition check: the quotient times Z - XY must reproduce the
        // numerator as far as the quotient's accuracy reaches (degree B - 1).
        let z_minus_xy = Self::monomial(self.vars, self.bound, Exponents::of(Var::Z), C::one())
            .try_sub(&Self::monomial(
                self.vars,
                self.bound,
                Exponents([1, 1, 0]),
                C::one(),
            ))
            .expect("compatible");
        let recomposed = quotient
            .padded_to_bound(self.bound)
            .try_mul(&z_minus_xy)
            .expect("compatible");
        if recomposed.restricted(self.bound - 1) != self.restricted(self.bound - 1) {
            return Err(SeriesError::DivisionFailure(
                "quotient times Z - X*Y does not reproduce the numerator".into(),
            ));
        }
        Ok(quotient)
    }

    /// Canonical text form: monomials in graded-lex order with exact
    /// coefficients, e.g. `1 + X + 1/2*X^2 - 2*Z`.
    pub fn canonical_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in &self.coeffs {
            let mono = e.render();
            let coeff = c.render();
            let term = if mono.is_empty() {
                coeff
            } else if c == &C::one() {
                mono
            } else if coeff == "-1" {
                format!("-{mono}")
            } else {
                format!("{coeff}*{mono}")
            };
            if out.is_empty() {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

impl TruncatedSeries<Rational> {
    /// Evaluate at a rational point (variables outside the declared set are
    /// ignored because their exponents are zero).
    pub fn evaluate(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            let mut term = c.clone();
            for (value, exp) in [(x, e.0[0]), (y, e.0[1]), (z, e.0[2])] {
                for _ in 0..exp {
                    term *= value;
                }
            }
            acc += &term;
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// Table of the power sums `alpha^k + beta^k` of the two roots of
/// `t^2 - (X+Y) t + Z`, expressed as polynomials in X, Y, Z through
/// Newton's identity for two variables.
#[derive(Clone, Debug)]
pub struct PowerSumTable {
    max_k: u32,
    bound: u32,
    entries: Vec<TruncatedSeries<Rational>>,
}

/// Build the power-sum table `p_k` for `1 <= k <= bound` at degree bound
/// `bound`, from `e_1 = X + Y`, `e_2 = Z`, `p_0 = 2` and
/// `p_k = e_1 p_{k-1} - e_2 p_{k-2}`.
pub fn newton_power_sums(bound: u32) -> PowerSumTable {
    newton_power_sums_to(bound, bound)
}

/// Power-sum table with the index range decoupled from the degree bound.
/// Entries for `k > bound` are still nonzero: `p_k` carries Z-heavy monomials
/// of total degree as low as `k/2`, so sums over power sums within a
/// truncation need `max_k` up to twice the bound.
pub fn newton_power_sums_to(max_k: u32, bound: u32) -> PowerSumTable {
    assert!(max_k >= 1, "power-sum table needs at least one entry");
    let vars = VarSet::XYZ;
    let e1 = TruncatedSeries::variable(vars, bound, Var::X)
        .try_add(&TruncatedSeries::variable(vars, bound, Var::Y))
        .expect("compatible");
    let e2 = TruncatedSeries::variable(vars, bound, Var::Z);
    let mut entries = Vec::with_capacity(max_k as usize);
    let mut p_prev2 = TruncatedSeries::constant(vars, bound, Rational::from(2));
    let mut p_prev1 = e1.clone();
    entries.push(p_prev1.clone());
    for _ in 2..=max_k {
        let p = e1
            .try_mul(&p_prev1)
            .expect("compatible")
            .try_sub(&e2.try_mul(&p_prev2).expect("compatible"))
            .expect("compatible");
        entries.push(p.clone());
        p_prev2 = p_prev1;
        p_prev1 = p;
    }
    PowerSumTable { max_k, bound, entries }
}

impl PowerSumTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `p_k` for `1 <= k <= max_k`.
    pub fn power_sum(&self, k: u32) -> &TruncatedSeries<Rational> {
        assert!((1..=self.max_k).contains(&k), "k out of table range");
        &self.entries[k as usize - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use proptest::prelude::*;

    fn xyz() -> VarSet {
        VarSet::XYZ
    }

    fn x(bound: u32) -> TruncatedSeries {
        TruncatedSeries::variable(xyz(), bound, Var::X)
    }

    fn y(bound: u32) -> TruncatedSeries {
        TruncatedSeries::variable(xyz(), bound, Var::Y)
    }

    fn z(bound: u32) -> TruncatedSeries {
        TruncatedSeries::variable(xyz(), bound, Var::Z)
    }

    fn one(bound: u32) -> TruncatedSeries {
        TruncatedSeries::one(xyz(), bound)
    }

    #[test]
    fn add_examples() {
        let s = x(2).try_add(&x(2).neg()).unwrap();
        assert!(s.is_zero());

        let lhs = one(2).try_add(&x(2)).unwrap();
        let rhs = TruncatedSeries::constant(xyz(), 2, Rational::from(2))
            .try_add(&z(2))
            .unwrap();
        let sum = lhs.try_add(&rhs).unwrap();
        assert_eq!(sum.canonical_text(), "3 + X + Z");

        let s = one(3).try_add(&x(3)).unwrap();
        assert_eq!(s.try_add(&TruncatedSeries::zero(xyz(), 3)).unwrap(), s);
    }

    #[test]
    fn add_bound_mismatch() {
        assert_eq!(
            x(2).try_add(&x(3)),
            Err(SeriesError::BoundMismatch { left: 2, right: 3 })
        );
        assert!(matches!(
            x(2).try_add(&TruncatedSeries::variable(VarSet::X, 2, Var::X)),
            Err(SeriesError::VariableMismatch { .. })
        ));
    }

    #[test]
    fn mul_truncates_at_bound() {
        assert_eq!(x(2).try_mul(&y(2)).unwrap().canonical_text(), "X*Y");
        assert!(x(1).try_mul(&y(1)).unwrap().is_zero());

        let one_plus_x = one(3).try_add(&x(3)).unwrap();
        let sq = one_plus_x.try_mul(&one_plus_x).unwrap();
        assert_eq!(sq.canonical_text(), "1 + 2*X + X^2");
    }

    #[test]
    fn invert_examples() {
        let geom = one(3).try_sub(&x(3)).unwrap().try_invert().unwrap();
        assert_eq!(geom.canonical_text(), "1 + X + X^2 + X^3");

        let half = TruncatedSeries::constant(xyz(), 2, Rational::from(2))
            .try_invert()
            .unwrap();
        assert_eq!(half, TruncatedSeries::constant(xyz(), 2, rational(1, 2)));

        let zxy = z(3).try_sub(&x(3).try_mul(&y(3)).unwrap()).unwrap();
        assert_eq!(zxy.try_invert(), Err(SeriesError::NonUnitConstantTerm));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::zero(xyz(), 4).try_exp().unwrap(), one(4));

        let e = x(3).try_exp().unwrap();
        assert_eq!(e.canonical_text(), "1 + X + 1/2*X^2 + 1/6*X^3");

        let prod = x(5)
            .try_exp()
            .unwrap()
            .try_mul(&x(5).neg().try_exp().unwrap())
            .unwrap();
        assert_eq!(prod, one(5));

        assert_eq!(one(3).try_exp(), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn log_examples() {
        assert!(one(4).try_log().unwrap().is_zero());

        let l = one(3).try_sub(&x(3)).unwrap().try_log().unwrap();
        assert_eq!(l.canonical_text(), "-X - 1/2*X^2 - 1/3*X^3");

        let arg = x(4).try_add(&y(4).try_mul(&z(4)).unwrap()).unwrap();
        assert_eq!(arg.try_exp().unwrap().try_log().unwrap(), arg);

        assert_eq!(x(3).try_log(), Err(SeriesError::ConstantTermNotOne));
    }

    #[test]
    fn newton_power_sum_table() {
        let table = newton_power_sums(4);
        assert_eq!(table.power_sum(1).canonical_text(), "X + Y");
        assert_eq!(table.power_sum(2).canonical_text(), "-2*Z + X^2 + 2*X*Y + Y^2");
        assert_eq!(
            table.power_sum(3).canonical_text(),
            "-3*X*Z - 3*Y*Z + X^3 + 3*X^2*Y + 3*X*Y^2 + Y^3"
        );
        assert_eq!(
            table.power_sum(2).coefficient(Exponents::of(Var::Z)).unwrap(),
            Rational::from(-2)
        );
    }

    #[test]
    fn power_sums_specialize_to_numeric_roots() {
        // X=3, Y=0, Z=2 makes alpha, beta the roots of t^2 - 3t + 2 = {1, 2},
        // so p_k = 1 + 2^k.
        let table = newton_power_sums(6);
        let (px, py, pz) = (Rational::from(3), Rational::zero(), Rational::from(2));
        for k in 1..=6u32 {
            let expected = Rational::from(1 + 2i64.pow(k));
            assert_eq!(table.power_sum(k).evaluate(&px, &py, &pz), expected, "k = {k}");
        }
    }

    #[test]
    fn coefficient_extraction() {
        let s = one(3)
            .try_add(
                &TruncatedSeries::monomial(xyz(), 3, Exponents([1, 0, 1]), Rational::from(3)),
            )
            .unwrap();
        assert_eq!(s.coefficient(Exponents([1, 0, 1])).unwrap(), Rational::from(3));
        assert_eq!(s.coefficient(Exponents([0, 1, 0])).unwrap(), Rational::zero());
        assert_eq!(
            s.coefficient(Exponents([2, 2, 0])),
            Err(SeriesError::DegreeOutOfBound { degree: 4, bound: 3 })
        );
    }

    #[test]
    fn divide_by_z_minus_xy_roundtrip() {
        let bound = 6u32;
        let q = one(bound)
            .try_add(&x(bound).scale(&Rational::from(2)))
            .unwrap()
            .try_add(&z(bound).try_mul(&y(bound)).unwrap().scale(&rational(5, 3)))
            .unwrap();
        let z_minus_xy = z(bound).try_sub(&x(bound).try_mul(&y(bound)).unwrap()).unwrap();
        let numerator = q.try_mul(&z_minus_xy).unwrap();
        let recovered = numerator.divide_by_z_minus_xy().unwrap();
        assert_eq!(recovered, q.restricted(bound - 2));
    }

    #[test]
    fn divide_by_z_minus_xy_rejects_non_multiples() {
        assert!(matches!(
            z(4).divide_by_z_minus_xy(),
            Err(SeriesError::DivisionFailure(_))
        ));
    }

    #[test]
    fn canonical_text_examples() {
        assert_eq!(TruncatedSeries::<Rational>::zero(xyz(), 2).canonical_text(), "0");
        let s = x(3)
            .neg()
            .try_add(&TruncatedSeries::monomial(
                xyz(),
                3,
                Exponents([0, 2, 0]),
                rational(-3, 2),
            ))
            .unwrap();
        assert_eq!(s.canonical_text(), "-X - 3/2*Y^2");
    }

    fn arb_exponents(max_degree: u32) -> impl Strategy<Value = Exponents> {
        (0..=max_degree).prop_flat_map(move |a| {
            (0..=(max_degree - a)).prop_flat_map(move |b| {
                (0..=(max_degree - a - b)).prop_map(move |c| Exponents([a, b, c]))
            })
        })
    }

    fn arb_series(bound: u32) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(
            (arb_exponents(bound), -6i64..=6, 1i64..=4),
            0..=5,
        )
        .prop_map(move |terms| {
            let mut s = TruncatedSeries::zero(VarSet::XYZ, bound);
            for (e, n, d) in terms {
                s.insert_add(e, Rational::new(n, d));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
            let ab = a.try_mul(&b).unwrap();
            let ba = b.try_mul(&a).unwrap();
            prop_assert_eq!(&ab, &ba);

            let left = ab.try_mul(&c).unwrap();
            let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);

            let dist_l = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
            let dist_r = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(dist_l, dist_r);

            prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        }

        #[test]
        fn invert_is_right_inverse(s in arb_series(5), c_num in 1i64..=5) {
            let unit = s.try_add(&TruncatedSeries::constant(
                VarSet::XYZ, 5, Rational::from(c_num) - s.constant_term(),
            )).unwrap();
            let inv = unit.try_invert().unwrap();
            prop_assert_eq!(unit.try_mul(&inv).unwrap(), TruncatedSeries::one(VarSet::XYZ, 5));
        }

        #[test]
        fn exp_log_roundtrip(s in arb_series(5)) {
            // Strip the constant term to land in exp's domain.
            let ct = s.constant_term();
            let s = s.try_sub(&TruncatedSeries::constant(VarSet::XYZ, 5, ct)).unwrap();
            let e = s.try_exp().unwrap();
            prop_assert_eq!(e.try_log().unwrap(), s.clone());
            prop_assert_eq!(e.try_log().unwrap().try_exp().unwrap(), e);
        }

        #[test]
        fn division_recovers_quotient(q in arb_series(6)) {
            let q = q.restricted(4).padded_to_bound(6);
            let z_minus_xy = TruncatedSeries::variable(VarSet::XYZ, 6, Var::Z)
                .try_sub(&TruncatedSeries::variable(VarSet::XYZ, 6, Var::X)
                    .try_mul(&TruncatedSeries::variable(VarSet::XYZ, 6, Var::Y)).unwrap())
                .unwrap();
            let n = q.try_mul(&z_minus_xy).unwrap();
            prop_assert_eq!(n.divide_by_z_minus_xy().unwrap(), q.restricted(4));
        }
    }
}
