//! Truncated multiple zeta values and multiple polylogarithms, the
//! series-equals-discretization identities for them, admissible-index
//! enumeration, and the truncated Arakawa-Kaneko values with their mod-p
//! congruence.
//!
//! All sums here run over integer chains below a cutoff `N`. They are
//! evaluated by a shared dynamic program over (position, value) states with
//! prefix sums, so the exhaustive small-grid sweeps stay fast; the test
//! module keeps independent brute-force enumerators as oracles.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{reduce_mod_p, ExactError, Rational, ResidueClass};
use crate::series::TruncatedSeries;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolylogError {
    #[error("pole: {factor} vanishes")]
    Pole { factor: String },
    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
}

/// A composition `(k_1, ..., k_r)` of positive integers indexing a multiple
/// zeta value or polylogarithm.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "index needs at least one part");
        assert!(parts.iter().all(|&k| k >= 1), "index parts must be positive");
        Index { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn height(&self) -> u32 {
        self.parts.iter().filter(|&&k| k > 1).count() as u32
    }

    pub fn is_admissible(&self) -> bool {
        *self.parts.last().expect("nonempty") >= 2
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Index {
    type Err = PolylogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| PolylogError::InvalidArgument {
            detail: format!("cannot parse index `{s}`"),
        })?;
        if parts.is_empty() || parts.contains(&0) {
            return Err(PolylogError::InvalidArgument {
                detail: format!("index `{s}` must list positive integers"),
            });
        }
        Ok(Index { parts })
    }
}

/// An index paired with an extra nonnegative integer `l`, written `k_1,...,k_r;l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedIndex {
    pub index: Index,
    pub l: u32,
}

impl fmt::Display for ExtendedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.index, self.l)
    }
}

impl FromStr for ExtendedIndex {
    type Err = PolylogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(';') {
            Some((idx, l)) => Ok(ExtendedIndex {
                index: idx.parse()?,
                l: l.trim().parse().map_err(|_| PolylogError::InvalidArgument {
                    detail: format!("cannot parse extension in `{s}`"),
                })?,
            }),
            None => Ok(ExtendedIndex { index: s.parse()?, l: 0 }),
        }
    }
}

/// Value ring of the chain dynamic program. Implemented by [`Rational`] and
/// by rational truncated series (which panic on bound mismatch; the kernel
/// only ever combines values built from one template).
pub(crate) trait ChainValue: Clone {
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl ChainValue for Rational {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl ChainValue for TruncatedSeries<Rational> {
    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.try_add(other).expect("chain values share a bound");
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).expect("chain values share a bound")
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// Run the chain DP and return the final prefix-sum array: entry `v` is the
/// sum over all chains whose last value is `<= v`.
///
/// Positions are filled with values in `1..n_excl`, each `>` (strict) or `>=`
/// (weak) its predecessor; `weight(p, v)` is the factor contributed by
/// placing value `v` at position `p`. The first position must be strict.
pub(crate) fn chain_dp_prefix<C: ChainValue>(
    strict_flags: &[bool],
    n_excl: u32,
    zero: &C,
    unit: &C,
    mut weight: impl FnMut(usize, u32) -> C,
) -> Vec<C> {
    assert!(!strict_flags.is_empty(), "need at least one position");
    assert!(strict_flags[0], "first position compares against a virtual 0");
    let n = n_excl as usize;
    if n <= 1 {
        return vec![zero.clone(); n.max(1)];
    }
    let mut prefix: Vec<C> = vec![unit.clone(); n];
    for (p, &strict) in strict_flags.iter().enumerate() {
        let mut layer: Vec<C> = vec![zero.clone(); n];
        for v in 1..n {
            let base = if strict { &prefix[v - 1] } else { &prefix[v] };
            if base.is_zero_value() {
                continue;
            }
            layer[v] = base.mul_ref(&weight(p, v as u32));
        }
        let mut acc = zero.clone();
        for (v, value) in layer.into_iter().enumerate() {
            acc.add_assign_ref(&value);
            prefix[v] = acc.clone();
        }
    }
    prefix
}

/// Total of the chain DP: the sum over all complete chains.
pub(crate) fn chain_dp<C: ChainValue>(
    strict_flags: &[bool],
    n_excl: u32,
    zero: &C,
    unit: &C,
    weight: impl FnMut(usize, u32) -> C,
) -> C {
    chain_dp_prefix(strict_flags, n_excl, zero, unit, weight)
        .last()
        .expect("nonempty prefix")
        .clone()
}

fn power_weight(v: u32, k: u32) -> Rational {
    Rational::from(v).pow(-(k as i32))
}

/// Truncated multiple zeta value
/// `sum_{0 < m_1 < ... < m_r < N} prod m_i^{-k_i}` (zero on an empty range).
pub fn truncated_mzv(k: &Index, n: u32) -> Rational {
    let flags = vec![true; k.parts().len()];
    chain_dp(&flags, n, &Rational::zero(), &Rational::one(), |p, v| {
        power_weight(v, k.parts()[p])
    })
}

/// Discretized-integral side of the truncated multiple zeta value: the sum
/// over weakly increasing blocks `n_{i,1} <= ... <= n_{i,k_i}`, consecutive
/// blocks strictly separated, of `prod_i 1/((N - n_{i,1}) n_{i,2} ... n_{i,k_i})`.
pub fn msw_rhs(k: &Index, n: u32) -> Rational {
    let ones = vec![Rational::one(); k.parts().len()];
    hms_rhs(k, &ones, n).expect("weights N - v never vanish for v < N")
}

/// Truncated multiple polylogarithm: the multiple zeta chain weighted at the
/// top with `(N - m_r)_{m_r} / (N/z - m_r)_{m_r}`.
pub fn truncated_mpl(k: &Index, z: &Rational, n: u32) -> Result<Rational, PolylogError> {
    if z.is_zero() {
        return Err(PolylogError::InvalidArgument { detail: "argument z must be nonzero".into() });
    }
    let x = vec![z.inverse().expect("z is nonzero"); k.parts().len()];
    hms_lhs(k, &x, n)
}

fn screen_scaled(x: &Rational, n: u32, role: &str) -> Result<(), PolylogError> {
    if n >= 2 && x.is_integer() {
        if let Some(t) = x.to_i64() {
            if t >= 1 && t < i64::from(n) {
                return Err(PolylogError::Pole {
                    factor: format!("{role} = {t} lies in [1, {}]", n - 1),
                });
            }
        }
    }
    Ok(())
}

/// Series side of the weighted discretization identity:
/// `sum prod m_i^{-k_i} * (N x_{i+1} - m_i)_{m_i} / (N x_i - m_i)_{m_i}` with
/// `x_{r+1} = 1` fixed internally.
pub fn hms_lhs(k: &Index, x: &[Rational], n: u32) -> Result<Rational, PolylogError> {
    let r = k.parts().len();
    if x.len() != r {
        return Err(PolylogError::InvalidArgument {
            detail: format!("index depth {r} needs exactly {r} weights, got {}", x.len()),
        });
    }
    // (N x_i - m)_m = prod_{j=1..m} (N x_i - j) vanishes iff N x_i is an
    // integer in [1, m]; screen every denominator family over 0 < m < N.
    let scaled: Vec<Rational> = x.iter().map(|xi| xi * &Rational::from(n)).collect();
    for s in &scaled {
        screen_scaled(s, n, "N*x_i")?;
    }

    // tables[i][m] = prod_{j<=m} (N x_i - j), with the fixed x_{r+1} = 1 last.
    let products = |s: &Rational| -> Vec<Rational> {
        let mut t = Vec::with_capacity(n as usize);
        let mut acc = Rational::one();
        t.push(acc.clone());
        for j in 1..n {
            acc *= &(s - &Rational::from(j));
            t.push(acc.clone());
        }
        t
    };
    let mut tables: Vec<Vec<Rational>> = scaled.iter().map(&products).collect();
    tables.push(products(&Rational::from(n)));

    let flags = vec![true; r];
    Ok(chain_dp(&flags, n, &Rational::zero(), &Rational::one(), |p, v| {
        power_weight(v, k.parts()[p]) * &tables[p + 1][v as usize] / &tables[p][v as usize]
    }))
}

/// Discretized side of the weighted identity:
/// block chains with `prod_i 1/((N x_i - n_{i,1}) n_{i,2} ... n_{i,k_i})`.
pub fn hms_rhs(k: &Index, x: &[Rational], n: u32) -> Result<Rational, PolylogError> {
    let r = k.parts().len();
    if x.len() != r {
        return Err(PolylogError::InvalidArgument {
            detail: format!("index depth {r} needs exactly {r} weights, got {}", x.len()),
        });
    }
    let scaled: Vec<Rational> = x.iter().map(|xi| xi * &Rational::from(n)).collect();
    for s in &scaled {
        screen_scaled(s, n, "N*x_i")?;
    }

    let mut flags = Vec::new();
    let mut block_of = Vec::new();
    for (i, &size) in k.parts().iter().enumerate() {
        for j in 0..size {
            flags.push(j == 0);
            block_of.push(i);
        }
    }
    Ok(chain_dp(&flags, n, &Rational::zero(), &Rational::one(), |p, v| {
        if flags[p] {
            (&scaled[block_of[p]] - &Rational::from(v))
                .inverse()
                .expect("screened above")
        } else {
            Rational::from(v).inverse().expect("v >= 1")
        }
    }))
}

/// Truncated single zeta value `sum_{n=1}^{N-1} n^{-k}`.
pub fn truncated_zeta(k: u32, n: u32) -> Rational {
    assert!(k >= 1, "exponent must be positive");
    let mut sum = Rational::zero();
    for v in 1..n {
        sum += &power_weight(v, k);
    }
    sum
}

/// Prefix table of the weakly increasing inner chains
/// `sum_{0 < n_1 <= ... <= n_l <= m} prod w(n_j)`, indexed by `m < N`.
fn weak_chain_prefix(l: u32, n: u32, weight: impl Fn(u32) -> Rational) -> Vec<Rational> {
    if l == 0 {
        return vec![Rational::one(); (n as usize).max(1)];
    }
    let mut flags = vec![false; l as usize];
    flags[0] = true;
    chain_dp_prefix(&flags, n, &Rational::zero(), &Rational::one(), |_, v| weight(v))
}

/// The truncated multiple zeta chain carrying the extra weakly increasing
/// inner sum `sum_{0 < n_1 <= ... <= n_l <= m_r} prod 1/(N - n_j)`.
pub fn tilde_zeta(k: &Index, l: u32, n: u32) -> Rational {
    let inner = weak_chain_prefix(l, n, |v| {
        Rational::from(n - v).inverse().expect("v < N")
    });
    let r = k.parts().len();
    let flags = vec![true; r];
    chain_dp(&flags, n, &Rational::zero(), &Rational::one(), |p, v| {
        let base = power_weight(v, k.parts()[p]);
        if p + 1 == r {
            base * &inner[v as usize]
        } else {
            base
        }
    })
}

/// All indices `(k_1,...,k_r)` with `k_r > 1`, weight `k`, depth `r` and
/// height `h`, in lexicographic order. Empty unless `k >= r + h` and `r >= h`.
pub fn enumerate_i0(k: u32, r: u32, h: u32) -> Vec<Index> {
    fn descend(k: u32, r: u32, h: u32, parts: &mut Vec<u32>, out: &mut Vec<Index>) {
        let placed = parts.len() as u32;
        let remaining_slots = r - placed;
        if remaining_slots == 0 {
            if k == 0 && h == 0 {
                out.push(Index::new(parts.clone()));
            }
            return;
        }
        let min_part = if remaining_slots == 1 { 2 } else { 1 };
        for part in min_part..=k.saturating_sub(remaining_slots - 1) {
            let tall = u32::from(part > 1);
            if tall > h {
                break;
            }
            parts.push(part);
            descend(k - part, r, h - tall, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 {
        let mut parts = Vec::with_capacity(r as usize);
        descend(k, r, h, &mut parts, &mut out);
    }
    out
}

/// All extended indices `(k_1,...,k_r; l)` with `k_r > 1`,
/// `sum k_i + l = k`, `r + l = q` and height `h`, ordered by `l` then index.
pub fn enumerate_i0_tilde(k: u32, q: u32, h: u32) -> Vec<ExtendedIndex> {
    let mut out = Vec::new();
    for l in 0..q {
        let (weight, depth) = (k.saturating_sub(l), q - l);
        if weight == 0 {
            continue;
        }
        for index in enumerate_i0(weight, depth, h) {
            out.push(ExtendedIndex { index, l });
        }
    }
    out
}

/// Truncated Arakawa-Kaneko value at a prime cutoff `p`:
/// `sum_{0<m_1<...<m_r<p, 0<n_1<=...<=n_{l-1}<=m_r}
///   1/(m_1^{k_1} ... m_r^{k_r + 1} n_1 ... n_{l-1})`.
pub fn arakawa_kaneko_truncated(k: &Index, l: u32, p: u32) -> Rational {
    assert!(l >= 1, "l must be positive");
    let inner = weak_chain_prefix(l - 1, p, |v| Rational::from(v).inverse().expect("v >= 1"));
    let r = k.parts().len();
    let flags = vec![true; r];
    chain_dp(&flags, p, &Rational::zero(), &Rational::one(), |pos, v| {
        if pos + 1 == r {
            power_weight(v, k.parts()[pos] + 1) * &inner[v as usize]
        } else {
            power_weight(v, k.parts()[pos])
        }
    })
}

/// Both residues of the Arakawa-Kaneko congruence: the truncated value at
/// cutoff `p` against `(-1)^{l-1}` times the tilde value of the raised index
/// with `l - 1` inner factors. Errors when `p` divides a denominator; such
/// instances are rejected, not patched.
pub fn ak_congruence_sides(
    k: &Index,
    l: u32,
    p: u32,
) -> Result<(ResidueClass, ResidueClass), ExactError> {
    assert!(l >= 1, "l must be positive");
    let left = reduce_mod_p(&arakawa_kaneko_truncated(k, l, p), u64::from(p))?;

    let mut raised = k.parts().to_vec();
    *raised.last_mut().expect("nonempty") += 1;
    let mut value = tilde_zeta(&Index::new(raised), l - 1, p);
    if l.is_multiple_of(2) {
        value = -value;
    }
    let right = reduce_mod_p(&value, u64::from(p))?;
    Ok((left, right))
}

/// All indices of the given weight (every composition), in lexicographic
/// order; used by exhaustive identity sweeps.
pub fn compositions_of_weight(weight: u32) -> Vec<Index> {
    fn descend(remaining: u32, parts: &mut Vec<u32>, out: &mut Vec<Index>) {
        if remaining == 0 {
            if !parts.is_empty() {
                out.push(Index::new(parts.clone()));
            }
            return;
        }
        for part in 1..=remaining {
            parts.push(part);
            descend(remaining - part, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    descend(weight, &mut parts, &mut out);
    out
}
