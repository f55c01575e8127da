//! Signed multisets of semifree isotropy representations and their K-ring.
//!
//! A fixed point of a semifree circle action on a stably complex `2n`-manifold
//! contributes a tangent representation `V_j = t^(n-j) + tbar^j` together with
//! an orientation sign. [`IsotropyData`] records a finite multiset of such
//! `(V_j, sign)` pairs at a common dimension `n`. The multisets form a
//! semiring (disjoint union, product) whose Grothendieck ring is the
//! polynomial ring `Z[t, tbar]`, computed by [`IsotropyData::k_class`].
//!
//! Multiplicities are arbitrary-precision: data may be built from huge
//! per-weight counts without materializing individual points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

/// Orientation sign of a fixed point, `-1` or `+1`.
///
/// Ordered numerically: `Minus < Plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// Interprets `1` as `Plus` and `-1` as `Minus`.
    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// An isomorphism class of semifree isotropy representations: `j` conjugate
/// line summands inside ambient complex dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepClass {
    n: u32,
    j: u32,
}

impl RepClass {
    pub fn new(n: u32, j: u32) -> Result<RepClass, Error> {
        if j > n {
            return Err(Error::IndexOutOfRange { j, n });
        }
        Ok(RepClass { n, j })
    }

    /// Ambient complex dimension.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of conjugate (weight `-1`) summands.
    pub fn j(&self) -> u32 {
        self.j
    }
}

/// A representation class together with an orientation sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPoint {
    pub rep: RepClass,
    pub sign: Sign,
}

/// A finite multiset of signed fixed-point representations at a common
/// ambient dimension `n`.
///
/// Stored in canonical form: counts keyed by `(j, sign)` in ascending order,
/// zero counts never retained. Equality and hashing are therefore
/// order-insensitive multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsotropyData {
    n: u32,
    counts: BTreeMap<(u32, Sign), BigUint>,
}

impl IsotropyData {
    /// The empty multiset at dimension `n`.
    pub fn empty(n: u32) -> IsotropyData {
        IsotropyData {
            n,
            counts: BTreeMap::new(),
        }
    }

    /// Builds data from a list of `(j, sign)` pairs, one entry per point.
    ///
    /// Rejects out-of-range weights and signs other than `1`/`-1`, naming
    /// the offending entry.
    pub fn new(
        n: u32,
        points: impl IntoIterator<Item = (u64, i64)>,
    ) -> Result<IsotropyData, Error> {
        let mut data = IsotropyData::empty(n);
        for (index, (j, sign)) in points.into_iter().enumerate() {
            if j > n as u64 {
                return Err(Error::WeightOutOfRange { index, j, n });
            }
            let sign = Sign::from_value(sign).ok_or(Error::InvalidSign { index, value: sign })?;
            data.add_count(j as u32, sign, BigUint::one());
        }
        Ok(data)
    }

    /// Builds data from per-weight multiplicity vectors of length `n + 1`.
    pub fn from_multiplicities(
        n: u32,
        m_plus: &[BigUint],
        m_minus: &[BigUint],
    ) -> Result<IsotropyData, Error> {
        let expected = n as usize + 1;
        if m_plus.len() != expected {
            return Err(Error::TableLength {
                field: "m_plus",
                expected,
                actual: m_plus.len(),
            });
        }
        if m_minus.len() != expected {
            return Err(Error::TableLength {
                field: "m_minus",
                expected,
                actual: m_minus.len(),
            });
        }
        let mut data = IsotropyData::empty(n);
        for j in 0..=n {
            data.add_count(j, Sign::Plus, m_plus[j as usize].clone());
            data.add_count(j, Sign::Minus, m_minus[j as usize].clone());
        }
        Ok(data)
    }

    fn add_count(&mut self, j: u32, sign: Sign, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self
            .counts
            .entry((j, sign))
            .or_insert_with(BigUint::zero) += count;
    }

    /// Ambient complex dimension.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of points, with multiplicity.
    pub fn point_count(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Multiplicity of the point `(V_j, sign)`.
    pub fn count(&self, j: u32, sign: Sign) -> BigUint {
        self.counts.get(&(j, sign)).cloned().unwrap_or_default()
    }

    /// Distinct points with their multiplicities, ascending in `(j, sign)`.
    pub fn support(&self) -> impl Iterator<Item = (RepClass, Sign, &BigUint)> + '_ {
        let n = self.n;
        self.counts
            .iter()
            .map(move |(&(j, sign), count)| (RepClass { n, j }, sign, count))
    }

    /// Counts points by weight and sign.
    pub fn multiplicities(&self) -> MultiplicityTable {
        let len = self.n as usize + 1;
        let mut m_plus = vec![BigUint::zero(); len];
        let mut m_minus = vec![BigUint::zero(); len];
        for (&(j, sign), count) in &self.counts {
            match sign {
                Sign::Plus => m_plus[j as usize] += count,
                Sign::Minus => m_minus[j as usize] += count,
            }
        }
        let m = m_plus
            .iter()
            .zip(&m_minus)
            .map(|(p, q)| BigInt::from(p.clone()) - BigInt::from(q.clone()))
            .collect();
        MultiplicityTable {
            n: self.n,
            m_plus,
            m_minus,
            m,
        }
    }

    /// Multiset union. Both operands must share the same dimension.
    pub fn disjoint_union(&self, other: &IsotropyData) -> Result<IsotropyData, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (&(j, sign), count) in &other.counts {
            out.add_count(j, sign, count.clone());
        }
        Ok(out)
    }

    /// Semiring product: one point per ordered pair, weights add and signs
    /// multiply. The result lives at dimension `self.n + other.n`.
    pub fn product(&self, other: &IsotropyData) -> IsotropyData {
        let mut out = IsotropyData::empty(self.n + other.n);
        for (&(j_a, sign_a), count_a) in &self.counts {
            for (&(j_b, sign_b), count_b) in &other.counts {
                out.add_count(j_a + j_b, sign_a * sign_b, count_a * count_b);
            }
        }
        out
    }

    /// Negates every sign. An involution.
    pub fn reverse_orientation(&self) -> IsotropyData {
        let mut out = IsotropyData::empty(self.n);
        for (&(j, sign), count) in &self.counts {
            out.add_count(j, sign.flipped(), count.clone());
        }
        out
    }

    /// Image in the Grothendieck ring `Z[t, tbar]`: each point `(V_j, s)`
    /// contributes `s * t^(n-j) * tbar^j`, so the class is homogeneous of
    /// total degree `n`.
    pub fn k_class(&self) -> KClass {
        let table = self.multiplicities();
        let mut k = KClass::zero();
        for j in 0..=self.n {
            k.add_term(self.n - j, j, table.m[j as usize].clone());
        }
        k
    }
}

impl fmt::Display for IsotropyData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        if self.counts.is_empty() {
            return write!(f, " empty");
        }
        for (&(j, sign), count) in &self.counts {
            write!(f, " ({j},{sign})x{count}")?;
        }
        Ok(())
    }
}

/// Per-weight point counts `m_plus[j]`, `m_minus[j]` and their differences
/// `m[j] = m_plus[j] - m_minus[j]` for `j = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    n: u32,
    m_plus: Vec<BigUint>,
    m_minus: Vec<BigUint>,
    m: Vec<BigInt>,
}

impl MultiplicityTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m_plus(&self) -> &[BigUint] {
        &self.m_plus
    }

    pub fn m_minus(&self) -> &[BigUint] {
        &self.m_minus
    }

    /// Signed multiplicities `m[j] = m_plus[j] - m_minus[j]`.
    pub fn m(&self) -> &[BigInt] {
        &self.m
    }

    /// Total point count, with multiplicity.
    pub fn total_count(&self) -> BigUint {
        self.m_plus.iter().chain(&self.m_minus).sum()
    }
}

/// An integer polynomial in the commuting symbols `t` and `tbar`.
///
/// Terms are keyed by `(t exponent, tbar exponent)`; zero coefficients are
/// never stored, so equality is coefficient-wise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KClass {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl KClass {
    pub fn zero() -> KClass {
        KClass::default()
    }

    pub fn one() -> KClass {
        KClass::monomial(BigInt::one(), 0, 0)
    }

    /// The single term `coeff * t^t_exp * tbar^tbar_exp`.
    pub fn monomial(coeff: BigInt, t_exp: u32, tbar_exp: u32) -> KClass {
        let mut k = KClass::zero();
        k.add_term(t_exp, tbar_exp, coeff);
        k
    }

    /// The generator `t`.
    pub fn t() -> KClass {
        KClass::monomial(BigInt::one(), 1, 0)
    }

    /// The conjugate generator `tbar`.
    pub fn tbar() -> KClass {
        KClass::monomial(BigInt::one(), 0, 1)
    }

    fn add_term(&mut self, t_exp: u32, tbar_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (t_exp, tbar_exp);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^t_exp * tbar^tbar_exp` (zero if absent).
    pub fn coefficient(&self, t_exp: u32, tbar_exp: u32) -> BigInt {
        self.terms
            .get(&(t_exp, tbar_exp))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms as `((t_exp, tbar_exp), coeff)`, ascending in the key.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&key, coeff)| (key, coeff))
    }

    /// Common total degree of all terms, or `None` for the zero polynomial
    /// or an inhomogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|&(a, b)| a + b);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `self` raised to the `exp`-th power (`pow(0)` is `1`).
    pub fn pow(&self, exp: u32) -> KClass {
        let mut out = KClass::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

impl Add for &KClass {
    type Output = KClass;

    fn add(self, rhs: &KClass) -> KClass {
        let mut out = self.clone();
        for (&(a, b), coeff) in &rhs.terms {
            out.add_term(a, b, coeff.clone());
        }
        out
    }
}

impl Sub for &KClass {
    type Output = KClass;

    fn sub(self, rhs: &KClass) -> KClass {
        let mut out = self.clone();
        for (&(a, b), coeff) in &rhs.terms {
            out.add_term(a, b, -coeff.clone());
        }
        out
    }
}

impl Neg for &KClass {
    type Output = KClass;

    fn neg(self) -> KClass {
        let mut out = KClass::zero();
        for (&(a, b), coeff) in &self.terms {
            out.add_term(a, b, -coeff.clone());
        }
        out
    }
}

impl Mul for &KClass {
    type Output = KClass;

    fn mul(self, rhs: &KClass) -> KClass {
        let mut out = KClass::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Ascending tbar exponent, then ascending t exponent.
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (b, a));
        for (pos, &(a, b)) in keys.iter().enumerate() {
            let coeff = &self.terms[&(a, b)];
            write_term(f, pos == 0, coeff, &monomial_name(a, b))?;
        }
        Ok(())
    }
}

fn monomial_name(t_exp: u32, tbar_exp: u32) -> String {
    let mut parts = Vec::new();
    match t_exp {
        0 => {}
        1 => parts.push("t".to_string()),
        e => parts.push(format!("t^{e}")),
    }
    match tbar_exp {
        0 => {}
        1 => parts.push("tbar".to_string()),
        e => parts.push(format!("tbar^{e}")),
    }
    parts.join("*")
}

/// Shared pretty-printer for signed terms of sparse polynomials.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &BigInt,
    monomial: &str,
) -> fmt::Result {
    use num_traits::Signed;
    let magnitude = coeff.abs();
    if first {
        if coeff.is_negative() {
            write!(f, "-")?;
        }
    } else if coeff.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if monomial.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        write!(f, "{monomial}")
    } else {
        write!(f, "{magnitude}*{monomial}")
    }
}
