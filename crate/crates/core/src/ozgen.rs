//! The generating function of truncated multiple polylogarithm sums of fixed
//! weight, depth and height, computed three independent ways as a truncated
//! series in X, Y, Z, together with its coefficient identities: the exact
//! divisibility by `Z - XY`, the specialized product / exponential forms at
//! `z = N/(N-Y)`, the coefficient-equals-tilde-sum identity, the `q -> k-q`
//! symmetry, and the reconstruction of the coefficient sums as `N`-independent
//! polynomials in truncated zeta values.
//!
//! The two roots `alpha, beta` of `t^2 - (X+Y) t + Z` are never represented
//! individually: every formula is routed through the symmetric quadratics
//! `m^2 + (Y-X) m + (Z - XY)` and `m^2 - (X+Y) m + Z` and through Newton
//! power sums, which keeps all arithmetic inside the rational series ring.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::Rational;
use crate::polylog::{
    chain_dp, enumerate_i0, enumerate_i0_tilde, tilde_zeta, truncated_mpl, truncated_zeta, Index,
    PolylogError,
};
use crate::series::{newton_power_sums_to, Coeff, Exponents, TruncatedSeries, Var, VarSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OzError {
    #[error("pole: {factor} vanishes")]
    Pole { factor: String },
    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
    #[error("division failure: {detail}")]
    DivisionFailure { detail: String },
    #[error("underdetermined: {provided} samples cannot pin {needed} coefficients")]
    UnderdeterminedSystem { needed: usize, provided: usize },
    #[error("validation failed: {detail}")]
    ValidationFailed { detail: String },
}

impl From<PolylogError> for OzError {
    fn from(e: PolylogError) -> Self {
        match e {
            PolylogError::Pole { factor } => OzError::Pole { factor },
            PolylogError::InvalidArgument { detail } => OzError::InvalidArgument { detail },
        }
    }
}

/// Argument choice for the generating function: a fixed nonzero rational, or
/// the symbolic specialization `z = N/(N-Y)` whose disc factors become
/// geometric series in Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZChoice {
    Numeric(Rational),
    SymbolicNOverNMinusY,
}

/// Configuration of a generating-function computation: cutoff `N`, argument
/// choice and total-degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunConfig {
    pub n: u32,
    pub z: ZChoice,
    pub degree: u32,
}

impl GenFunConfig {
    pub fn numeric(n: u32, z: Rational, degree: u32) -> Result<Self, OzError> {
        if n == 0 {
            return Err(OzError::InvalidArgument { detail: "N must be positive".into() });
        }
        if z.is_zero() {
            return Err(OzError::InvalidArgument { detail: "argument z must be nonzero".into() });
        }
        Ok(GenFunConfig { n, z: ZChoice::Numeric(z), degree })
    }

    pub fn symbolic(n: u32, degree: u32) -> Result<Self, OzError> {
        if n == 0 {
            return Err(OzError::InvalidArgument { detail: "N must be positive".into() });
        }
        Ok(GenFunConfig { n, z: ZChoice::SymbolicNOverNMinusY, degree })
    }

    /// Every disc factor `(N-m)_m / (N/z - m)_m` for `0 < m < N` must be
    /// pole-free; for symbolic z the denominators `N - n - Y` have nonzero
    /// constant term by construction.
    fn screen(&self) -> Result<(), OzError> {
        if let ZChoice::Numeric(z) = &self.z {
            let w = Rational::from(self.n).checked_div(z).expect("nonzero");
            if self.n >= 2 && w.is_integer() {
                if let Some(t) = w.to_i64() {
                    if t >= 1 && t < i64::from(self.n) {
                        return Err(OzError::Pole {
                            factor: format!("N/z = {t} lies in [1, {}]", self.n - 1),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

const XYZ: VarSet = VarSet::XYZ;

fn series_one(bound: u32) -> TruncatedSeries {
    TruncatedSeries::one(XYZ, bound)
}

fn series_const(bound: u32, c: Rational) -> TruncatedSeries {
    TruncatedSeries::constant(XYZ, bound, c)
}

/// `c0 + c_v * v` as a series.
fn linear(bound: u32, c0: Rational, var: Var, c_v: Rational) -> TruncatedSeries {
    let head = series_const(bound, c0);
    if bound == 0 {
        return head;
    }
    head.try_add(&TruncatedSeries::monomial(XYZ, bound, Exponents::of(var), c_v))
        .expect("compatible")
}

/// The proof quadratic `m^2 + (Y - X) m + (Z - XY)`, equal to
/// `(m + alpha - X)(m + beta - X)`.
fn shifted_root_quadratic(bound: u32, m: u32) -> TruncatedSeries {
    let m_rat = Rational::from(m);
    let mut s = series_const(bound, &m_rat * &m_rat);
    if bound >= 1 {
        s = s
            .try_add(&TruncatedSeries::monomial(
                XYZ,
                bound,
                Exponents::of(Var::X),
                -m_rat.clone(),
            ))
            .expect("compatible")
            .try_add(&TruncatedSeries::monomial(XYZ, bound, Exponents::of(Var::Y), m_rat))
            .expect("compatible")
            .try_add(&TruncatedSeries::monomial(
                XYZ,
                bound,
                Exponents::of(Var::Z),
                Rational::one(),
            ))
            .expect("compatible");
    }
    if bound >= 2 {
        s = s
            .try_sub(&TruncatedSeries::monomial(
                XYZ,
                bound,
                Exponents([1, 1, 0]),
                Rational::one(),
            ))
            .expect("compatible");
    }
    s
}

/// The monic quadratic `n^2 - (X + Y) n + Z`, equal to `(n - alpha)(n - beta)`.
fn root_quadratic(bound: u32, n: u32) -> TruncatedSeries {
    let n_rat = Rational::from(n);
    let mut s = series_const(bound, &n_rat * &n_rat);
    if bound >= 1 {
        s = s
            .try_add(&TruncatedSeries::monomial(XYZ, bound, Exponents::of(Var::X), -n_rat.clone()))
            .expect("compatible")
            .try_add(&TruncatedSeries::monomial(XYZ, bound, Exponents::of(Var::Y), -n_rat))
            .expect("compatible")
            .try_add(&TruncatedSeries::monomial(
                XYZ,
                bound,
                Exponents::of(Var::Z),
                Rational::one(),
            ))
            .expect("compatible");
    }
    s
}

/// Symbolic disc factors `(N-m)_m / (N - Y - m)_m` for `0 <= m < N`, i.e.
/// `prod_{v=N-m}^{N-1} v / (v - Y)`, with the divisions realized by series
/// inversion.
fn symbolic_disc_factors(n: u32, bound: u32) -> Vec<TruncatedSeries> {
    let mut out = Vec::with_capacity(n as usize);
    let mut acc = series_one(bound);
    out.push(acc.clone());
    for m in 1..n {
        let v = n - m;
        let inv = linear(bound, Rational::from(v), Var::Y, -Rational::one())
            .try_invert()
            .expect("constant term N - m is nonzero");
        acc = acc
            .try_mul(&inv)
            .expect("compatible")
            .scale(&Rational::from(v));
        out.push(acc.clone());
    }
    out
}

/// Numeric disc factors `(N-m)_m / (N/z - m)_m` for `0 <= m < N`.
fn numeric_disc_factors(n: u32, z: &Rational) -> Vec<Rational> {
    let w = Rational::from(n).checked_div(z).expect("nonzero");
    let mut out = Vec::with_capacity(n as usize);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for m in 1..n {
        acc *= &(Rational::from(n - m) / (&w - &Rational::from(m)));
        out.push(acc.clone());
    }
    out
}

/// The generating function summed directly from its definition: for every
/// monomial `X^{k-r-h} Y^{r-h} Z^{h-1}` within the bound, the coefficient is
/// the sum of truncated polylogarithms over the admissible indices of weight
/// `k`, depth `r` and height `h`. For symbolic z each polylogarithm is a
/// series in Y through the geometric expansion of its disc factor.
pub fn phi0_direct(cfg: &GenFunConfig) -> Result<TruncatedSeries, OzError> {
    cfg.screen()?;
    let bound = cfg.degree;
    let mut out = TruncatedSeries::zero(XYZ, bound);
    let symbolic_ratios = match &cfg.z {
        ZChoice::Numeric(_) => None,
        ZChoice::SymbolicNOverNMinusY => Some(symbolic_disc_factors(cfg.n, bound)),
    };
    for e_z in 0..=bound {
        for e_y in 0..=(bound - e_z) {
            for e_x in 0..=(bound - e_z - e_y) {
                let h = e_z + 1;
                let r = e_y + h;
                let k = e_x + r + h;
                let exps = Exponents([e_x, e_y, e_z]);
                match (&cfg.z, &symbolic_ratios) {
                    (ZChoice::Numeric(z), _) => {
                        let mut coeff = Rational::zero();
                        for index in enumerate_i0(k, r, h) {
                            coeff += &truncated_mpl(&index, z, cfg.n)?;
                        }
                        if !coeff.is_zero() {
                            out = out
                                .try_add(&TruncatedSeries::monomial(XYZ, bound, exps, coeff))
                                .expect("compatible");
                        }
                    }
                    (ZChoice::SymbolicNOverNMinusY, Some(ratios)) => {
                        let mut group = TruncatedSeries::zero(XYZ, bound);
                        for index in enumerate_i0(k, r, h) {
                            group = group
                                .try_add(&symbolic_polylog(&index, cfg.n, bound, ratios))
                                .expect("compatible");
                        }
                        if !group.is_zero() {
                            let mono =
                                TruncatedSeries::monomial(XYZ, bound, exps, Rational::one());
                            out = out
                                .try_add(&group.try_mul(&mono).expect("compatible"))
                                .expect("compatible");
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    Ok(out)
}

/// Truncated polylogarithm at the symbolic argument: the zeta chain with the
/// geometric disc-factor series attached at the top value.
fn symbolic_polylog(
    index: &Index,
    n: u32,
    bound: u32,
    ratios: &[TruncatedSeries],
) -> TruncatedSeries {
    let r = index.parts().len();
    let flags = vec![true; r];
    let zero = TruncatedSeries::zero(XYZ, bound);
    let unit = series_one(bound);
    chain_dp(&flags, n, &zero, &unit, |p, v| {
        let scale = Rational::from(v).pow(-(index.parts()[p] as i32));
        if p + 1 == r {
            ratios[v as usize].scale(&scale)
        } else {
            series_const(bound, scale)
        }
    })
}

/// The generating function through the termwise product identity from the
/// direct proof: `sum_{0<n<N} prod_{0<m<n} quad(m)/(m(m-X)) * 1/(n(n-X))
/// * disc(n)`, all divisions realized by series inversion.
pub fn phi0_product_form(cfg: &GenFunConfig) -> Result<TruncatedSeries, OzError> {
    cfg.screen()?;
    let bound = cfg.degree;
    let disc = DiscFactors::build(cfg, bound);
    let mut out = TruncatedSeries::zero(XYZ, bound);
    let mut running = series_one(bound);
    for n in 1..cfg.n {
        // 1/(n (n - X)).
        let inv = linear(bound, Rational::from(n), Var::X, -Rational::one())
            .try_invert()
            .expect("constant term n is nonzero")
            .scale(&Rational::from(n).inverse().expect("n >= 1"));
        let term = running.try_mul(&inv).expect("compatible");
        out = out.try_add(&disc.apply(&term, n)).expect("compatible");
        running = running
            .try_mul(&shifted_root_quadratic(bound, n))
            .expect("compatible")
            .try_mul(&inv)
            .expect("compatible");
    }
    Ok(out)
}

/// The generating function through the already-divided hypergeometric sum:
/// `sum_{0<n<N} prod_{m=1}^{n-1} quad(m) / ((1-X)_n n!) * disc(n)`, where the
/// numerator product expands `(1+alpha-X)_{n-1} (1+beta-X)_{n-1}` without
/// individual roots.
pub fn phi0_closed_form(cfg: &GenFunConfig) -> Result<TruncatedSeries, OzError> {
    cfg.screen()?;
    let bound = cfg.degree;
    let disc = DiscFactors::build(cfg, bound);
    let mut out = TruncatedSeries::zero(XYZ, bound);
    let mut quad_product = series_one(bound);
    let mut pochhammer = series_one(bound);
    let mut factorial = Rational::one();
    for n in 1..cfg.n {
        pochhammer = pochhammer
            .try_mul(&linear(bound, Rational::from(n), Var::X, -Rational::one()))
            .expect("compatible");
        factorial *= &Rational::from(n);
        let term = quad_product
            .try_mul(&pochhammer.try_invert().expect("nonzero constant term"))
            .expect("compatible")
            .scale(&factorial.inverse().expect("nonzero"));
        out = out.try_add(&disc.apply(&term, n)).expect("compatible");
        quad_product = quad_product
            .try_mul(&shifted_root_quadratic(bound, n))
            .expect("compatible");
    }
    Ok(out)
}

enum DiscFactors {
    Numeric(Vec<Rational>),
    Symbolic(Vec<TruncatedSeries>),
}

impl DiscFactors {
    fn build(cfg: &GenFunConfig, bound: u32) -> DiscFactors {
        match &cfg.z {
            ZChoice::Numeric(z) => DiscFactors::Numeric(numeric_disc_factors(cfg.n, z)),
            ZChoice::SymbolicNOverNMinusY => {
                DiscFactors::Symbolic(symbolic_disc_factors(cfg.n, bound))
            }
        }
    }

    fn apply(&self, term: &TruncatedSeries, n: u32) -> TruncatedSeries {
        match self {
            DiscFactors::Numeric(t) => term.scale(&t[n as usize]),
            DiscFactors::Symbolic(t) => term.try_mul(&t[n as usize]).expect("compatible"),
        }
    }
}

/// The undivided truncated hypergeometric series
/// `2F1^{(N)}(alpha - X, beta - X; 1 - X; z) - 1` at the given bound, with
/// every Pochhammer product expanded through the symmetric quadratic.
fn undivided_numerator(cfg: &GenFunConfig, bound: u32) -> TruncatedSeries {
    let disc = DiscFactors::build(cfg, bound);
    let mut out = TruncatedSeries::zero(XYZ, bound);
    let mut quad_product = series_one(bound);
    let mut pochhammer = series_one(bound);
    let mut factorial = Rational::one();
    for m in 1..cfg.n {
        quad_product = quad_product
            .try_mul(&shifted_root_quadratic(bound, m - 1))
            .expect("compatible");
        pochhammer = pochhammer
            .try_mul(&linear(bound, Rational::from(m), Var::X, -Rational::one()))
            .expect("compatible");
        factorial *= &Rational::from(m);
        let term = quad_product
            .try_mul(&pochhammer.try_invert().expect("nonzero constant term"))
            .expect("compatible")
            .scale(&factorial.inverse().expect("nonzero"));
        out = out.try_add(&disc.apply(&term, m)).expect("compatible");
    }
    out
}

/// Compute the undivided series at working degree `D+2`, confirm its exact
/// divisibility by `Z - XY`, and check the quotient against
/// [`phi0_closed_form`] up to degree `D`.
pub fn divisibility_check(cfg: &GenFunConfig) -> Result<bool, OzError> {
    cfg.screen()?;
    let numerator = undivided_numerator(cfg, cfg.degree + 2);
    let Ok(quotient) = numerator.divide_by_z_minus_xy() else {
        return Ok(false);
    };
    Ok(quotient == phi0_closed_form(cfg)?)
}

/// The three expressions of the specialized generating function at
/// `z = N/(N-Y)`: the direct sum, the divided finite product
/// `(1/(Z-XY)) { prod_n (n^2-(X+Y)n+Z)/((n-X)(n-Y)) - 1 }`, and the divided
/// exponential of truncated zeta values over Newton power sums. The divided
/// forms are obtained by computing numerators to degree `D+2` and performing
/// the exact division, so a non-divisible numerator is reported as an error
/// rather than silently truncated.
pub fn toz_special_sides(
    n: u32,
    degree: u32,
) -> Result<(TruncatedSeries, TruncatedSeries, TruncatedSeries), OzError> {
    if n < 2 {
        return Err(OzError::InvalidArgument { detail: "N must be at least 2".into() });
    }
    let cfg = GenFunConfig::symbolic(n, degree)?;
    let s1 = phi0_direct(&cfg)?;

    let bound = degree + 2;
    let mut product = series_one(bound);
    for m in 1..n {
        let inv_x = linear(bound, Rational::from(m), Var::X, -Rational::one())
            .try_invert()
            .expect("nonzero constant term");
        let inv_y = linear(bound, Rational::from(m), Var::Y, -Rational::one())
            .try_invert()
            .expect("nonzero constant term");
        product = product
            .try_mul(&root_quadratic(bound, m))
            .expect("compatible")
            .try_mul(&inv_x)
            .expect("compatible")
            .try_mul(&inv_y)
            .expect("compatible");
    }
    let numerator = product.try_sub(&series_one(bound)).expect("compatible");
    let s2 = numerator.divide_by_z_minus_xy().map_err(|e| OzError::DivisionFailure {
        detail: format!("finite product form: {e}"),
    })?;

    // p_k touches total degree ceil(k/2) through its Z-heavy monomials, so
    // the zeta-weighted sum must run to 2*bound to be exact at this bound.
    let table = newton_power_sums_to(2 * bound, bound);
    let mut exponent = TruncatedSeries::zero(XYZ, bound);
    for k in 2..=(2 * bound) {
        let mut gap = table.power_sum(k).neg();
        if k <= bound {
            gap = gap
                .try_add(&TruncatedSeries::monomial(
                    XYZ,
                    bound,
                    Exponents([k, 0, 0]),
                    Rational::one(),
                ))
                .expect("compatible")
                .try_add(&TruncatedSeries::monomial(
                    XYZ,
                    bound,
                    Exponents([0, k, 0]),
                    Rational::one(),
                ))
                .expect("compatible");
        }
        let gap = gap.scale(&(truncated_zeta(k, n) / Rational::from(k)));
        exponent = exponent.try_add(&gap).expect("compatible");
    }
    let numerator = exponent
        .try_exp()
        .expect("zero constant term")
        .try_sub(&series_one(bound))
        .expect("compatible");
    let s3 = numerator.divide_by_z_minus_xy().map_err(|e| OzError::DivisionFailure {
        detail: format!("exponential form: {e}"),
    })?;

    Ok((s1, s2, s3))
}

fn validate_triple(k: u32, q: u32, h: u32) -> Result<(), OzError> {
    if h < 1 || q < h || k < q + h {
        return Err(OzError::InvalidArgument {
            detail: format!("(k,q,h) = ({k},{q},{h}) does not index a monomial"),
        });
    }
    Ok(())
}

/// The direct coefficient sum over the extended index set; the right side of
/// the coefficient identity and both sides of the symmetry.
pub fn tilde_sum(k: u32, q: u32, h: u32, n: u32) -> Rational {
    let mut sum = Rational::zero();
    for e in enumerate_i0_tilde(k, q, h) {
        sum += &tilde_zeta(&e.index, e.l, n);
    }
    sum
}

/// Coefficient identity at `z = N/(N-Y)`: the coefficient of
/// `X^{k-q-h} Y^{q-h} Z^{h-1}` in the directly summed generating function
/// versus the tilde-sum over the extended index set.
pub fn prop54_sides(k: u32, q: u32, h: u32, n: u32) -> Result<(Rational, Rational), OzError> {
    validate_triple(k, q, h)?;
    let exps = Exponents([k - q - h, q - h, h - 1]);
    let cfg = GenFunConfig::symbolic(n, exps.degree())?;
    let lhs = phi0_direct(&cfg)?
        .coefficient(exps)
        .expect("degree within bound by construction");
    Ok((lhs, tilde_sum(k, q, h, n)))
}

/// The two mirrored tilde-sums whose equality is the `q -> k-q` symmetry.
pub fn symmetry_check(k: u32, q: u32, h: u32, n: u32) -> Result<(Rational, Rational), OzError> {
    validate_triple(k, q, h)?;
    validate_triple(k, k - q, h)?;
    Ok((tilde_sum(k, q, h, n), tilde_sum(k, k - q, h, n)))
}

/// Monomial in the abstract zeta symbols `Z2, Z3, ...`: a sorted multiset of
/// part sizes, graded by their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaMonomial(Vec<u32>);

impl ZetaMonomial {
    fn one() -> Self {
        ZetaMonomial(Vec::new())
    }

    fn symbol(j: u32) -> Self {
        assert!(j >= 2, "zeta symbols start at Z2");
        ZetaMonomial(vec![j])
    }

    fn mul(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable();
        ZetaMonomial(parts)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    fn render(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let j = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == j).count();
            if run == 1 {
                out.push(format!("Z{j}"));
            } else {
                out.push(format!("Z{j}^{run}"));
            }
            i += run;
        }
        out.join("*")
    }
}

impl Ord for ZetaMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZetaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the abstract zeta symbols with rational coefficients; the
/// coefficient ring used to reconstruct the `N`-independent polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaPoly {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ZetaMonomial::one(), c);
        }
        ZetaPoly { terms }
    }

    pub fn symbol(j: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ZetaMonomial::symbol(j), Rational::one());
        ZetaPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    /// True when every monomial has the given weight (the zero polynomial is
    /// homogeneous of any weight).
    pub fn is_homogeneous_of_weight(&self, weight: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == weight)
    }

    /// Evaluate by substituting a value for each symbol `Z_j`.
    pub fn substitute(&self, value: impl Fn(u32) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for &j in &mono.0 {
                term *= &value(j);
            }
            acc += &term;
        }
        acc
    }

    /// Canonical text form: graded-lex monomials with exact coefficients,
    /// e.g. `1/2*Z2^2 - 1/2*Z4`.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (mono, coeff) in &self.terms {
            let m = mono.render();
            let c = coeff.to_string();
            let term = if m.is_empty() {
                c
            } else if coeff.is_one() {
                m
            } else if c == "-1" {
                format!("-{m}")
            } else {
                format!("{c}*{m}")
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

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

impl Coeff for ZetaPoly {
    fn zero() -> Self {
        ZetaPoly { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        ZetaPoly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        e.insert(sum);
                    }
                }
            }
        }
        ZetaPoly { terms }
    }

    fn neg_ref(&self) -> Self {
        ZetaPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<ZetaMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let key = ma.mul(mb);
                let value = ca * cb;
                match terms.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(value);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &value;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            e.insert(sum);
                        }
                    }
                }
            }
        }
        ZetaPoly { terms }
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return <ZetaPoly as Coeff>::zero();
        }
        ZetaPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (mono, coeff) = self.terms.iter().next().expect("one term");
        if !mono.0.is_empty() {
            return None;
        }
        coeff.inverse().map(ZetaPoly::constant)
    }

    fn render(&self) -> String {
        if self.terms.len() > 1 {
            format!("({})", self.canonical_text())
        } else {
            self.canonical_text()
        }
    }
}

/// Reconstruct the `N`-independent polynomial `P_{k,q,h}` in the symbols
/// `Z2, Z3, ...`: run the exponential form with each truncated zeta value
/// treated as an abstract symbol, divide by `Z - XY`, and read off the
/// coefficient of `X^{k-q-h} Y^{q-h} Z^{h-1}`. The result is then validated
/// by substituting actual truncated zeta values for every sampled `N` and
/// comparing against the direct tilde-sum.
pub fn reconstruct_p(k: u32, q: u32, h: u32, samples: &[u32]) -> Result<ZetaPoly, OzError> {
    validate_triple(k, q, h)?;
    let exps = Exponents([k - q - h, q - h, h - 1]);
    let bound = exps.degree() + 2;

    // As in the numeric exponential form, power sums up to 2*bound reach
    // into the truncation through Z-heavy monomials.
    let table = newton_power_sums_to(2 * bound, bound);
    let mut exponent: TruncatedSeries<ZetaPoly> = TruncatedSeries::zero(XYZ, bound);
    for j in 2..=(2 * bound) {
        let mut gap = table.power_sum(j).neg();
        if j <= bound {
            gap = gap
                .try_add(&TruncatedSeries::monomial(
                    XYZ,
                    bound,
                    Exponents([j, 0, 0]),
                    Rational::one(),
                ))
                .expect("compatible")
                .try_add(&TruncatedSeries::monomial(
                    XYZ,
                    bound,
                    Exponents([0, j, 0]),
                    Rational::one(),
                ))
                .expect("compatible");
        }
        let lifted = gap
            .map_coeffs(|c| ZetaPoly::constant(c.clone()))
            .mul_coeff(&ZetaPoly::symbol(j))
            .scale(&Rational::from(j).inverse().expect("j >= 2"));
        exponent = exponent.try_add(&lifted).expect("compatible");
    }
    let numerator = exponent
        .try_exp()
        .expect("zero constant term")
        .try_sub(&TruncatedSeries::one(XYZ, bound))
        .expect("compatible");
    let quotient = numerator.divide_by_z_minus_xy().map_err(|e| OzError::DivisionFailure {
        detail: format!("symbolic exponential form: {e}"),
    })?;
    let poly = quotient.coefficient(exps).expect("degree within bound");

    if !poly.is_homogeneous_of_weight(k) {
        return Err(OzError::ValidationFailed {
            detail: format!("extracted polynomial for ({k},{q},{h}) is not homogeneous"),
        });
    }

    let mut distinct: Vec<u32> = samples.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let needed = count_partitions_min2(k);
    if distinct.len() < needed {
        return Err(OzError::UnderdeterminedSystem { needed, provided: distinct.len() });
    }
    for &n in &distinct {
        let substituted = poly.substitute(|j| truncated_zeta(j, n));
        let direct = tilde_sum(k, q, h, n);
        if substituted != direct {
            return Err(OzError::ValidationFailed {
                detail: format!(
                    "P_({k},{q},{h}) evaluates to {substituted} at N = {n}, direct sum is {direct}"
                ),
            });
        }
    }
    Ok(poly)
}

/// Number of partitions of `k` into parts of size at least 2; the monomial
/// count of a homogeneous degree-`k` polynomial in `Z2, Z3, ...`.
fn count_partitions_min2(k: u32) -> usize {
    fn rec(remaining: u32, min_part: u32) -> usize {
        if remaining == 0 {
            return 1;
        }
        let mut count = 0;
        let mut part = min_part;
        while part <= remaining {
            count += rec(remaining - part, part);
            part += 1;
        }
        count
    }
    rec(k, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn phi0_direct_examples() {
        // Constant term is the depth-1, height-1, weight-2 polylogarithm.
        let cfg = GenFunConfig::numeric(2, rational(1, 2), 0).unwrap();
        let s = phi0_direct(&cfg).unwrap();
        assert_eq!(s.constant_term(), rational(1, 3));

        let cfg = GenFunConfig::numeric(1, rational(1, 2), 4).unwrap();
        assert!(phi0_direct(&cfg).unwrap().is_zero());

        let cfg = GenFunConfig::numeric(4, rational(2, 3), 3).unwrap();
        let s = phi0_direct(&cfg).unwrap();
        assert_eq!(
            s.constant_term(),
            truncated_mpl(&Index::new(vec![2]), &rational(2, 3), 4).unwrap()
        );
    }

    #[test]
    fn phi0_three_way_agreement_numeric() {
        let mut checked = 0;
        for n in 1..=5u32 {
            for z in [rational(1, 2), rational(1, 3), Rational::from(2)] {
                let cfg = GenFunConfig::numeric(n, z.clone(), 4).unwrap();
                // z = 2 at even N makes N/z an integer in [1, N-1]: a pole
                // instance, rejected rather than compared.
                let direct = match phi0_direct(&cfg) {
                    Ok(s) => s,
                    Err(OzError::Pole { .. }) => continue,
                    Err(e) => panic!("unexpected error {e}"),
                };
                let product = phi0_product_form(&cfg).unwrap();
                let closed = phi0_closed_form(&cfg).unwrap();
                assert_eq!(direct, product, "product form, N={n} z={z}");
                assert_eq!(direct, closed, "closed form, N={n} z={z}");
                checked += 1;
            }
        }
        assert!(checked >= 12);
    }

    #[test]
    fn phi0_three_way_agreement_symbolic() {
        for n in 2..=5u32 {
            let cfg = GenFunConfig::symbolic(n, 4).unwrap();
            let direct = phi0_direct(&cfg).unwrap();
            let product = phi0_product_form(&cfg).unwrap();
            let closed = phi0_closed_form(&cfg).unwrap();
            assert_eq!(direct, product, "product form, N={n}");
            assert_eq!(direct, closed, "closed form, N={n}");
        }
    }

    #[test]
    fn phi0_pole_screening() {
        // N/z = 2 lies in [1, N-1].
        let cfg = GenFunConfig::numeric(3, rational(3, 2), 2).unwrap();
        assert!(matches!(phi0_direct(&cfg), Err(OzError::Pole { .. })));
        assert!(GenFunConfig::numeric(3, Rational::zero(), 2).is_err());
    }

    #[test]
    fn divisibility_check_holds() {
        for n in 1..=4u32 {
            let cfg = GenFunConfig::numeric(n, rational(1, 2), 3).unwrap();
            assert!(divisibility_check(&cfg).unwrap(), "N = {n}");
        }
        let cfg = GenFunConfig::symbolic(4, 3).unwrap();
        assert!(divisibility_check(&cfg).unwrap());
    }

    #[test]
    fn divided_quotient_constant_term_is_dilogarithm() {
        let cfg = GenFunConfig::numeric(5, rational(1, 2), 2).unwrap();
        let numerator = undivided_numerator(&cfg, 4);
        let quotient = numerator.divide_by_z_minus_xy().unwrap();
        assert_eq!(
            quotient.constant_term(),
            truncated_mpl(&Index::new(vec![2]), &rational(1, 2), 5).unwrap()
        );
    }

    #[test]
    fn toz_special_triple_agreement() {
        for n in 2..=5u32 {
            let (s1, s2, s3) = toz_special_sides(n, 4).unwrap();
            assert_eq!(s1, s2, "product expression, N={n}");
            assert_eq!(s1, s3, "exponential expression, N={n}");
            assert_eq!(s1.constant_term(), truncated_zeta(2, n), "constant term, N={n}");
        }
        let (s1, _, _) = toz_special_sides(3, 4).unwrap();
        assert_eq!(s1.constant_term(), rational(5, 4));
    }

    #[test]
    fn toz_special_sides_are_xy_symmetric() {
        let (_, s2, s3) = toz_special_sides(5, 4).unwrap();
        for series in [&s2, &s3] {
            for (e, c) in series.terms() {
                let swapped = Exponents([e.0[1], e.0[0], e.0[2]]);
                assert_eq!(series.coefficient(swapped).unwrap(), c.clone());
            }
        }
    }

    #[test]
    fn prop54_examples() {
        let (lhs, rhs) = prop54_sides(3, 1, 1, 3).unwrap();
        assert_eq!(lhs, rational(9, 8));
        assert_eq!(rhs, rational(9, 8));

        let (lhs, rhs) = prop54_sides(3, 2, 1, 3).unwrap();
        assert_eq!(lhs, rational(9, 8));
        assert_eq!(rhs, rational(9, 8));

        for n in 2..=6 {
            let (lhs, rhs) = prop54_sides(2, 1, 1, n).unwrap();
            assert_eq!(lhs, truncated_zeta(2, n));
            assert_eq!(rhs, lhs);
        }
    }

    #[test]
    fn prop54_small_sweep() {
        for k in 2..=5u32 {
            for h in 1..=k / 2 {
                for q in h..=(k - h) {
                    for n in 2..=4 {
                        let (lhs, rhs) = prop54_sides(k, q, h, n).unwrap();
                        assert_eq!(lhs, rhs, "(k,q,h,N)=({k},{q},{h},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        let (lhs, rhs) = symmetry_check(3, 1, 1, 3).unwrap();
        assert_eq!(lhs, rational(9, 8));
        assert_eq!(rhs, rational(9, 8));

        let (lhs, rhs) = symmetry_check(4, 2, 1, 6).unwrap();
        assert_eq!(lhs, rhs);

        let (lhs, rhs) = symmetry_check(4, 1, 1, 5).unwrap();
        assert_eq!(lhs, rhs);

        assert!(symmetry_check(3, 3, 1, 4).is_err());
    }

    #[test]
    fn reconstruct_p_examples() {
        let p = reconstruct_p(2, 1, 1, &[2, 3, 4]).unwrap();
        assert_eq!(p.canonical_text(), "Z2");

        let p = reconstruct_p(3, 1, 1, &[2, 3, 4]).unwrap();
        assert_eq!(p.canonical_text(), "Z3");

        assert!(matches!(
            reconstruct_p(4, 1, 1, &[2]),
            Err(OzError::UnderdeterminedSystem { .. })
        ));
    }

    #[test]
    fn reconstruct_p_validates_small_grid() {
        for k in 2..=5u32 {
            for h in 1..=k / 2 {
                for q in h..=(k - h) {
                    let p = reconstruct_p(k, q, h, &[2, 3, 4, 5, 6, 7, 8]).unwrap();
                    assert!(p.is_homogeneous_of_weight(k));
                }
            }
        }
    }

    #[test]
    fn zeta_poly_algebra() {
        let z2 = ZetaPoly::symbol(2);
        let z3 = ZetaPoly::symbol(3);
        let prod = z2.mul_ref(&z3);
        assert_eq!(prod.canonical_text(), "Z2*Z3");
        let square = z2.mul_ref(&z2);
        assert_eq!(square.canonical_text(), "Z2^2");
        let combo = square.scale(&rational(1, 2)).add_ref(&z3.neg_ref());
        assert_eq!(combo.canonical_text(), "-Z3 + 1/2*Z2^2");
        assert_eq!(combo.substitute(Rational::from), Rational::from(-1));
        assert!(ZetaPoly::constant(rational(2, 3)).inverse().is_some());
        assert!(z2.inverse().is_none());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions_min2(2), 1);
        assert_eq!(count_partitions_min2(4), 2); // 4, 2+2
        assert_eq!(count_partitions_min2(6), 4); // 6, 4+2, 3+3, 2+2+2
        assert_eq!(count_partitions_min2(7), 4); // 7, 5+2, 4+3, 3+2+2
    }
}
