//! Truncated beta and truncated generalized hypergeometric functions, their
//! discretized-integral right-hand sides, and the finite analogues of the
//! Gauss summation and the Pfaff / Euler transformations.
//!
//! Every identity is exposed as separately computable sides so the harness
//! can compare them exactly. Parameter degeneracies are screened up front:
//! a vanishing Pochhammer denominator is a [`HyperError::Pole`] naming the
//! factor, and a vanishing transformed argument is a
//! [`HyperError::DegenerateArgument`]; callers reject and resample.

use thiserror::Error;

use crate::exact::{factorial, rising_factorial, rising_factorial_is_zero, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HyperError {
    #[error("pole: {factor} vanishes")]
    Pole { factor: String },
    #[error("degenerate argument: {detail}")]
    DegenerateArgument { detail: String },
    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
}

fn pole(factor: impl Into<String>) -> HyperError {
    HyperError::Pole { factor: factor.into() }
}

/// Parameters of a truncated generalized hypergeometric evaluation: upper
/// parameter list, lower parameter list, nonzero argument `z` and truncation
/// order `N`. The defining sums use `N/z`, so that value is computed once at
/// construction and carried along as `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperParams {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    z: Rational,
    n: u32,
    w: Rational,
}

impl HyperParams {
    pub fn new(
        upper: Vec<Rational>,
        lower: Vec<Rational>,
        z: Rational,
        n: u32,
    ) -> Result<Self, HyperError> {
        if z.is_zero() {
            return Err(HyperError::InvalidArgument { detail: "argument z must be nonzero".into() });
        }
        let w = Rational::from(n).checked_div(&z).expect("z is nonzero");
        Ok(HyperParams { upper, lower, z, n, w })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn z(&self) -> &Rational {
        &self.z
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `N/z`, the quantity every truncation factor is built from.
    pub fn w(&self) -> &Rational {
        &self.w
    }

    /// Screen every Pochhammer denominator of the defining sum: none of
    /// `(b_j)_m` for `m <= N` may vanish and none of `(N/z - m)_m` may vanish
    /// (equivalently, `N/z` must not be an integer in `[1, N]`).
    pub fn well_posedness(&self) -> Result<(), HyperError> {
        for b in &self.lower {
            if rising_factorial_is_zero(b, self.n) {
                return Err(pole(format!("(b)_N with b = {b}, N = {}", self.n)));
            }
        }
        let shifted = &self.w - &Rational::from(self.n);
        if rising_factorial_is_zero(&shifted, self.n) {
            return Err(pole(format!("(N/z - m)_m with N/z = {}, N = {}", self.w, self.n)));
        }
        Ok(())
    }
}

/// Parameters of a truncated beta evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaParams {
    pub a: Rational,
    pub b: Rational,
    pub n: u32,
}

impl BetaParams {
    pub fn new(a: Rational, b: Rational, n: u32) -> Result<Self, HyperError> {
        if n == 0 {
            return Err(HyperError::InvalidArgument { detail: "N must be positive".into() });
        }
        Ok(BetaParams { a, b, n })
    }

    fn screen(&self) -> Result<(), HyperError> {
        if rising_factorial_is_zero(&self.a, self.n) {
            return Err(pole(format!("(a)_N with a = {}, N = {}", self.a, self.n)));
        }
        if rising_factorial_is_zero(&self.b, self.n) {
            return Err(pole(format!("(b)_N with b = {}, N = {}", self.b, self.n)));
        }
        Ok(())
    }
}

/// Truncated beta function `(a+b)_N (N-1)! / ((a)_N (b)_N)`.
pub fn truncated_beta(p: &BetaParams) -> Result<Rational, HyperError> {
    p.screen()?;
    let num = rising_factorial(&(&p.a + &p.b), p.n)
        * Rational::from_bigint(factorial(u64::from(p.n) - 1));
    let den = rising_factorial(&p.a, p.n) * rising_factorial(&p.b, p.n);
    Ok(num / den)
}

/// Discretized-integral side of the truncated beta function:
/// `(1/N) sum_n (1+n)_{N-n}/(a+n)_{N-n} * (1+N-n)_n/(b+N-n)_n`.
pub fn disc_beta_sum(p: &BetaParams) -> Result<Rational, HyperError> {
    p.screen()?;
    let n_big = p.n;
    let mut sum = Rational::zero();
    for n in 0..=n_big {
        let left = rising_factorial(&Rational::from(1 + n), n_big - n)
            / rising_factorial(&(&p.a + &Rational::from(n)), n_big - n);
        let right = rising_factorial(&Rational::from(1 + n_big - n), n)
            / rising_factorial(&(&p.b + &Rational::from(n_big - n)), n);
        sum += &(left * right);
    }
    Ok(sum / Rational::from(n_big))
}

/// The multivariate analogue: returns `(closed form, discretized sum)` where
/// the closed form is `(a_1+...+a_d)_N ((N-1)!)^{d-1} / prod (a_i)_N` and the
/// sum runs over compositions `n_1+...+n_d = N`.
pub fn multivariate_disc_beta(
    a: &[Rational],
    n: u32,
) -> Result<(Rational, Rational), HyperError> {
    if a.len() < 2 {
        return Err(HyperError::InvalidArgument { detail: "need at least two parameters".into() });
    }
    if n == 0 {
        return Err(HyperError::InvalidArgument { detail: "N must be positive".into() });
    }
    for ai in a {
        if rising_factorial_is_zero(ai, n) {
            return Err(pole(format!("(a_i)_N with a_i = {ai}, N = {n}")));
        }
    }
    let d = a.len();

    let mut total = Rational::zero();
    for ai in a {
        total += ai;
    }
    let mut closed = rising_factorial(&total, n);
    let fac = Rational::from_bigint(factorial(u64::from(n) - 1));
    for _ in 1..d {
        closed *= &fac;
    }
    for ai in a {
        closed /= &rising_factorial(ai, n);
    }

    let mut sum = Rational::zero();
    let mut parts = vec![0u32; d];
    compose_sum(a, n, 0, n, &mut parts, &mut sum);
    let mut scale = Rational::one();
    let n_rat = Rational::from(n);
    for _ in 1..d {
        scale /= &n_rat;
    }
    Ok((closed, sum * scale))
}

fn compose_sum(
    a: &[Rational],
    n_total: u32,
    idx: usize,
    remaining: u32,
    parts: &mut Vec<u32>,
    sum: &mut Rational,
) {
    if idx == a.len() - 1 {
        parts[idx] = remaining;
        let mut term = Rational::one();
        for (ai, &ni) in a.iter().zip(parts.iter()) {
            term *= &(rising_factorial(&Rational::from(1 + ni), n_total - ni)
                / rising_factorial(&(ai + &Rational::from(ni)), n_total - ni));
        }
        *sum += &term;
        return;
    }
    for ni in 0..=remaining {
        parts[idx] = ni;
        compose_sum(a, n_total, idx + 1, remaining - ni, parts, sum);
    }
}

/// The `[N]`-truncated generalized hypergeometric function:
/// `sum_{m=0}^{N} prod (a_i)_m / (prod (b_j)_m m!) * (N+1-m)_m / (N/z - m)_m`.
pub fn trunc_pfq_bracket(p: &HyperParams) -> Result<Rational, HyperError> {
    p.well_posedness()?;
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for m in 1..=p.n {
        let m_rat = Rational::from(m);
        let shift = Rational::from(m - 1);
        let mut num = Rational::from(p.n + 1 - m);
        for a in &p.upper {
            num *= &(a + &shift);
        }
        let mut den = (&p.w - &m_rat) * m_rat;
        for b in &p.lower {
            den *= &(b + &shift);
        }
        term *= &(num / den);
        sum += &term;
    }
    Ok(sum)
}

/// The `(N)`-truncated Gauss hypergeometric function, summing `m = 0..N-1`
/// with factor `(N-m)_m / (N/z - m)_m`. Related to the `[N]` form by
/// truncating at `N-1` and rescaling the argument by `(N-1)/N`.
pub fn trunc_2f1_paren(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
    n: u32,
) -> Result<Rational, HyperError> {
    if n == 0 {
        return Err(HyperError::InvalidArgument { detail: "N must be positive".into() });
    }
    if z.is_zero() {
        return Err(HyperError::InvalidArgument { detail: "argument z must be nonzero".into() });
    }
    let w = Rational::from(n).checked_div(z).expect("z is nonzero");
    if rising_factorial_is_zero(c, n - 1) {
        return Err(pole(format!("(c)_m with c = {c}, m <= {}", n - 1)));
    }
    let shifted = &w - &Rational::from(n - 1);
    if rising_factorial_is_zero(&shifted, n - 1) {
        return Err(pole(format!("(N/z - m)_m with N/z = {w}, m <= {}", n - 1)));
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for m in 1..n {
        let m_rat = Rational::from(m);
        let shift = Rational::from(m - 1);
        let num = (a + &shift) * (b + &shift) * Rational::from(n - m);
        let den = (c + &shift) * &m_rat * (&w - &m_rat);
        term *= &(num / den);
        sum += &term;
    }
    Ok(sum)
}

/// Terminating hypergeometric series at unit argument. Some upper parameter
/// must be a nonpositive integer `-N`; the sum runs to the smallest such `N`.
pub fn terminating_pfq_at_1(
    upper: &[Rational],
    lower: &[Rational],
) -> Result<Rational, HyperError> {
    let n = upper
        .iter()
        .filter(|a| a.is_integer() && (a.is_negative() || a.is_zero()))
        .filter_map(|a| (-a).to_i64())
        .min()
        .ok_or_else(|| HyperError::InvalidArgument {
            detail: "no nonpositive-integer upper parameter".into(),
        })?;
    let n = u32::try_from(n).expect("termination order fits in u32");
    for b in lower {
        if rising_factorial_is_zero(b, n) {
            return Err(pole(format!("(b)_m with b = {b}, m <= {n}")));
        }
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for m in 1..=n {
        let shift = Rational::from(m - 1);
        let mut num = Rational::one();
        for a in upper {
            num *= &(a + &shift);
        }
        let mut den = Rational::from(m);
        for b in lower {
            den *= &(b + &shift);
        }
        term *= &(num / den);
        sum += &term;
    }
    Ok(sum)
}

/// Closed form of the truncated binomial series `1F0`:
/// `(a + N/z - N)_N / (N/z - N)_N`.
pub fn t1f0_closed_form(a: &Rational, z: &Rational, n: u32) -> Result<Rational, HyperError> {
    if z.is_zero() {
        return Err(HyperError::InvalidArgument { detail: "argument z must be nonzero".into() });
    }
    let w = Rational::from(n).checked_div(z).expect("z is nonzero");
    let base = &w - &Rational::from(n);
    if rising_factorial_is_zero(&base, n) {
        return Err(pole(format!("(N/z - N)_N with N/z = {w}, N = {n}")));
    }
    Ok(rising_factorial(&(a + &base), n) / rising_factorial(&base, n))
}

/// Discretized-integral side for the parameter-raising formula: expresses the
/// `(p+1, q+1)` truncated function with outer parameters `(a; b)` through the
/// inner `(p, q)` function evaluated at orders `n <= N` and argument `(n/N) z`.
pub fn gen_thg_int_rhs(
    a: &Rational,
    inner_upper: &[Rational],
    inner_lower: &[Rational],
    b: &Rational,
    z: &Rational,
    n_order: u32,
) -> Result<Rational, HyperError> {
    if z.is_zero() {
        return Err(HyperError::InvalidArgument { detail: "argument z must be nonzero".into() });
    }
    let n_big = n_order;
    let b_minus_a = b - a;
    if rising_factorial_is_zero(b, n_big) {
        return Err(pole(format!("(b)_N with b = {b}, N = {n_big}")));
    }
    if rising_factorial_is_zero(a, n_big) {
        return Err(pole(format!("(a+n)_(N-n) with a = {a}, N = {n_big}")));
    }
    if rising_factorial_is_zero(&b_minus_a, n_big) {
        return Err(pole(format!("(b-a+N-n)_n with b-a = {b_minus_a}, N = {n_big}")));
    }

    let mut sum = Rational::zero();
    for n in 0..=n_big {
        let left = rising_factorial(&Rational::from(1 + n), n_big - n)
            / rising_factorial(&(a + &Rational::from(n)), n_big - n);
        let right = rising_factorial(&Rational::from(1 + n_big - n), n)
            / rising_factorial(&(&b_minus_a + &Rational::from(n_big - n)), n);
        // The order-0 inner truncation is the single m = 0 term, i.e. 1,
        // regardless of argument, so the vanishing argument (0/N)z never
        // needs evaluation.
        let inner = if n == 0 {
            Rational::one()
        } else {
            let arg = z * &Rational::from(n) / Rational::from(n_big);
            trunc_pfq_bracket(&HyperParams::new(
                inner_upper.to_vec(),
                inner_lower.to_vec(),
                arg,
                n,
            )?)?
        };
        sum += &(left * right * inner);
    }
    if n_big == 0 {
        return Ok(sum);
    }
    let prefactor = rising_factorial(a, n_big) * rising_factorial(&b_minus_a, n_big)
        / (rising_factorial(b, n_big) * Rational::from_bigint(factorial(u64::from(n_big))));
    Ok(prefactor * sum)
}

/// Discretized-integral side of the truncated Euler integral formula for the
/// `[N]`-truncated Gauss function with parameters `(a, b; c)`.
pub fn thg_int_rhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
    n_order: u32,
) -> Result<Rational, HyperError> {
    if z.is_zero() {
        return Err(HyperError::InvalidArgument { detail: "argument z must be nonzero".into() });
    }
    let n_big = n_order;
    let w = Rational::from(n_big).checked_div(z).expect("z is nonzero");
    let c_minus_a = c - a;
    if rising_factorial_is_zero(c, n_big) {
        return Err(pole(format!("(c)_N with c = {c}, N = {n_big}")));
    }
    if rising_factorial_is_zero(a, n_big) {
        return Err(pole(format!("(a+n)_(N-n) with a = {a}, N = {n_big}")));
    }
    if rising_factorial_is_zero(&c_minus_a, n_big) {
        return Err(pole(format!("(c-a+N-n)_n with c-a = {c_minus_a}, N = {n_big}")));
    }
    let w_base = &w - &Rational::from(n_big);
    if rising_factorial_is_zero(&w_base, n_big) {
        return Err(pole(format!("(N/z - n)_n with N/z = {w}, N = {n_big}")));
    }

    let mut sum = Rational::zero();
    for n in 0..=n_big {
        let n_rat = Rational::from(n);
        let left = rising_factorial(&Rational::from(1 + n), n_big - n)
            / rising_factorial(&(a + &n_rat), n_big - n);
        let mid = rising_factorial(&Rational::from(1 + n_big - n), n)
            / rising_factorial(&(&c_minus_a + &Rational::from(n_big - n)), n);
        let disc = rising_factorial(&(&(b + &w) - &n_rat), n)
            / rising_factorial(&(&w - &n_rat), n);
        sum += &(left * mid * disc);
    }
    if n_big == 0 {
        return Ok(sum);
    }
    let prefactor = rising_factorial(a, n_big) * rising_factorial(&c_minus_a, n_big)
        / (rising_factorial(c, n_big) * Rational::from_bigint(factorial(u64::from(n_big))));
    Ok(prefactor * sum)
}

/// Chain-sum expansion of the terminating `p+1 F p` at unit argument:
/// `sum over 0 = n_0 <= n_1 <= ... <= n_p = N` of
/// `prod_j C(n_j, n_{j-1}) (a_j)_{n_{j-1}} (b_j - a_j)_{n_j - n_{j-1}} / (b_j)_{n_j}`.
pub fn chain_sum_pfp(
    upper: &[Rational],
    lower: &[Rational],
    n: u32,
) -> Result<Rational, HyperError> {
    if upper.len() != lower.len() || upper.is_empty() {
        return Err(HyperError::InvalidArgument {
            detail: "need equally many upper and lower parameters, at least one each".into(),
        });
    }
    for b in lower {
        if rising_factorial_is_zero(b, n) {
            return Err(pole(format!("(b_j)_n with b_j = {b}, n <= {n}")));
        }
    }
    let p = upper.len();
    let table = |x: &Rational| -> Vec<Rational> {
        let mut t = Vec::with_capacity(n as usize + 1);
        let mut acc = Rational::one();
        let mut factor = x.clone();
        t.push(acc.clone());
        for _ in 0..n {
            acc *= &factor;
            factor += &Rational::one();
            t.push(acc.clone());
        }
        t
    };
    let a_tab: Vec<Vec<Rational>> = upper.iter().map(table).collect();
    let diff_tab: Vec<Vec<Rational>> = upper
        .iter()
        .zip(lower.iter())
        .map(|(a, b)| table(&(b - a)))
        .collect();
    let b_tab: Vec<Vec<Rational>> = lower.iter().map(table).collect();

    struct Tables<'a> {
        a: &'a [Vec<Rational>],
        diff: &'a [Vec<Rational>],
        b: &'a [Vec<Rational>],
        p: usize,
        n: u32,
    }

    fn descend(j: usize, prev: u32, partial: &Rational, t: &Tables, sum: &mut Rational) {
        if j == t.p {
            *sum += partial;
            return;
        }
        // n_j ranges over prev..=N, pinned to N at the last level.
        let range = if j == t.p - 1 { t.n..=t.n } else { prev..=t.n };
        for nj in range {
            let factor = Rational::from_bigint(crate::exact::binomial(
                u64::from(nj),
                u64::from(prev),
            )) * &t.a[j][prev as usize]
                * &t.diff[j][(nj - prev) as usize]
                / &t.b[j][nj as usize];
            let next = partial * factor;
            descend(j + 1, nj, &next, t, sum);
        }
    }

    let tables = Tables { a: &a_tab, diff: &diff_tab, b: &b_tab, p, n };
    let mut sum = Rational::zero();
    descend(0, 0, &Rational::one(), &tables, &mut sum);
    Ok(sum)
}

/// Finite Gauss summation: the `[N]` function at the balanced argument
/// `z = N/(N+c-a-b)` versus the closed product `(c-a)_N (c-b)_N / ((c)_N (c-a-b)_N)`.
pub fn finite_gauss_sides(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: u32,
) -> Result<(Rational, Rational), HyperError> {
    let denom = &(&Rational::from(n) + c) - &(a + b);
    if denom.is_zero() {
        return Err(HyperError::DegenerateArgument {
            detail: "N + c - a - b = 0 leaves the balanced argument undefined".into(),
        });
    }
    let z = Rational::from(n).checked_div(&denom).expect("nonzero");
    let lhs = trunc_pfq_bracket(&HyperParams::new(
        vec![a.clone(), b.clone()],
        vec![c.clone()],
        z,
        n,
    )?)?;

    let c_minus_ab = &(c - a) - b;
    if rising_factorial_is_zero(c, n) {
        return Err(pole(format!("(c)_N with c = {c}, N = {n}")));
    }
    if rising_factorial_is_zero(&c_minus_ab, n) {
        return Err(pole(format!("(c-a-b)_N with c-a-b = {c_minus_ab}, N = {n}")));
    }
    let rhs = rising_factorial(&(c - a), n) * rising_factorial(&(c - b), n)
        / (rising_factorial(c, n) * rising_factorial(&c_minus_ab, n));
    Ok((lhs, rhs))
}

/// Finite Pfaff transformation: `[N]` at `(a, b; c; z)` versus the prefactor
/// `(b + N/z - N)_N / (N/z - N)_N` times `[N]` at `(c-a, b; c)` with argument
/// `N / (N - N/z + 1 - b)`.
pub fn finite_pfaff_sides(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
    n: u32,
) -> Result<(Rational, Rational), HyperError> {
    let params = HyperParams::new(vec![a.clone(), b.clone()], vec![c.clone()], z.clone(), n)?;
    let w = params.w().clone();
    let lhs = trunc_pfq_bracket(&params)?;
    if n == 0 {
        // Order 0 is the single m = 0 term on both sides; the transformed
        // argument N/(...) degenerates to zero and is never needed.
        return Ok((lhs, Rational::one()));
    }

    let new_denom = &(&Rational::from(n) - &w) - &(b - &Rational::one());
    if new_denom.is_zero() {
        return Err(HyperError::DegenerateArgument {
            detail: "N - N/z + 1 - b = 0 leaves the transformed argument undefined".into(),
        });
    }
    let w_base = &w - &Rational::from(n);
    if rising_factorial_is_zero(&w_base, n) {
        return Err(pole(format!("(N/z - N)_N with N/z = {w}, N = {n}")));
    }
    let prefactor = rising_factorial(&(b + &w_base), n) / rising_factorial(&w_base, n);
    let new_z = Rational::from(n).checked_div(&new_denom).expect("nonzero");
    let inner = trunc_pfq_bracket(&HyperParams::new(
        vec![c - a, b.clone()],
        vec![c.clone()],
        new_z,
        n,
    )?)?;
    Ok((lhs, prefactor * inner))
}

/// Finite Euler transformation: `[N]` at `(a, b; c; z)` versus
/// `(a+b-c + N/z - N)_N / (N/z - N)_N` times `[N]` at `(c-a, c-b; c)` with
/// argument `N / (N/z + a + b - c)`.
pub fn finite_euler_sides(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
    n: u32,
) -> Result<(Rational, Rational), HyperError> {
    let params = HyperParams::new(vec![a.clone(), b.clone()], vec![c.clone()], z.clone(), n)?;
    let w = params.w().clone();
    let lhs = trunc_pfq_bracket(&params)?;
    if n == 0 {
        return Ok((lhs, Rational::one()));
    }

    let new_denom = &(&w + &(a + b)) - c;
    if new_denom.is_zero() {
        return Err(HyperError::DegenerateArgument {
            detail: "N/z + a + b - c = 0 leaves the transformed argument undefined".into(),
        });
    }
    let w_base = &w - &Rational::from(n);
    if rising_factorial_is_zero(&w_base, n) {
        return Err(pole(format!("(N/z - N)_N with N/z = {w}, N = {n}")));
    }
    let shift = &(a + b) - c;
    let prefactor = rising_factorial(&(&shift + &w_base), n) / rising_factorial(&w_base, n);
    let new_z = Rational::from(n).checked_div(&new_denom).expect("nonzero");
    let inner = trunc_pfq_bracket(&HyperParams::new(
        vec![c - a, c - b],
        vec![c.clone()],
        new_z,
        n,
    )?)?;
    Ok((lhs, prefactor * inner))
}

/// Both sides of the terminating 3F2 transformation
/// `3F2(a,b,-N; d,e; 1) = (e-a)_N/(e)_N * 3F2(a,d-b,-N; d,a+1-N-e; 1)`.
pub fn transform_3f2_sides(
    a: &Rational,
    b: &Rational,
    d: &Rational,
    e: &Rational,
    n: u32,
) -> Result<(Rational, Rational), HyperError> {
    let minus_n = -Rational::from(n);
    let new_lower = &(a + &Rational::one()) - &(&Rational::from(n) + e);
    // Even when another upper parameter truncates a side early, the identity
    // compares the formal order-N sums, so every lower parameter must stay
    // pole-free through order N.
    for (name, param) in [("d", d), ("e", e), ("a+1-N-e", &new_lower)] {
        if rising_factorial_is_zero(param, n) {
            return Err(pole(format!("({name})_N with {name} = {param}, N = {n}")));
        }
    }
    let lhs = terminating_pfq_at_1(
        &[a.clone(), b.clone(), minus_n.clone()],
        &[d.clone(), e.clone()],
    )?;
    let prefactor = rising_factorial(&(e - a), n) / rising_factorial(e, n);
    let inner = terminating_pfq_at_1(&[a.clone(), d - b, minus_n], &[d.clone(), new_lower])?;
    Ok((lhs, prefactor * inner))
}
