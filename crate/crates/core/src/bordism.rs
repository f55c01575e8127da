//! Bordism classes of realizable data, as integer polynomials in the
//! 2-sphere class `s`.
//!
//! Realizable data at dimension `n` is bordant to `m0` copies of the n-fold
//! sphere power, so its class is `m0 * s^n`. The `Z[t, tbar]` image of such
//! data is `m0 * (t + tbar)^n`; [`kclass_to_bordism`] recognizes exactly
//! those polynomials and recovers the class from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chern::binomial;
use crate::data::{write_term, IsotropyData, KClass};
use crate::realization::{realize, NotRealizable};

/// A sparse integer polynomial in the bordism generator `s`, keyed by
/// degree. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BordismPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl BordismPolynomial {
    pub fn zero() -> BordismPolynomial {
        BordismPolynomial::default()
    }

    /// The single term `coeff * s^degree`.
    pub fn monomial(coeff: BigInt, degree: u32) -> BordismPolynomial {
        let mut p = BordismPolynomial::zero();
        p.add_term(degree, coeff);
        p
    }

    fn add_term(&mut self, degree: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `s^degree` (zero if absent).
    pub fn coefficient(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&deg, coeff)| (deg, coeff))
    }
}

impl Add for &BordismPolynomial {
    type Output = BordismPolynomial;

    fn add(self, rhs: &BordismPolynomial) -> BordismPolynomial {
        let mut out = self.clone();
        for (&deg, coeff) in &rhs.coeffs {
            out.add_term(deg, coeff.clone());
        }
        out
    }
}

impl Neg for &BordismPolynomial {
    type Output = BordismPolynomial;

    fn neg(self) -> BordismPolynomial {
        let mut out = BordismPolynomial::zero();
        for (&deg, coeff) in &self.coeffs {
            out.add_term(deg, -coeff.clone());
        }
        out
    }
}

impl Mul for &BordismPolynomial {
    type Output = BordismPolynomial;

    fn mul(self, rhs: &BordismPolynomial) -> BordismPolynomial {
        let mut out = BordismPolynomial::zero();
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &rhs.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BordismPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (pos, (&deg, coeff)) in self.coeffs.iter().enumerate() {
            let monomial = match deg {
                0 => String::new(),
                1 => "s".to_string(),
                d => format!("s^{d}"),
            };
            write_term(f, pos == 0, coeff, &monomial)?;
        }
        Ok(())
    }
}

/// The bordism class `m0 * s^n` of realizable data; the realizability
/// defects otherwise.
pub fn bordism_class(d: &IsotropyData) -> Result<BordismPolynomial, NotRealizable> {
    let w = realize(d)?;
    Ok(BordismPolynomial::monomial(w.m0().clone(), w.n()))
}

/// A component of a mixed-dimension family failed to realize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentNotRealizable {
    pub index: usize,
    pub not_realizable: NotRealizable,
}

/// Sums the classes of a family of data values of possibly different
/// dimensions into one polynomial. Fails on the first unrealizable
/// component, reporting its index.
pub fn graded_bordism_class(
    components: &[IsotropyData],
) -> Result<BordismPolynomial, ComponentNotRealizable> {
    let mut total = BordismPolynomial::zero();
    for (index, d) in components.iter().enumerate() {
        let class = bordism_class(d).map_err(|not_realizable| ComponentNotRealizable {
            index,
            not_realizable,
        })?;
        total = &total + &class;
    }
    Ok(total)
}

/// The K-class is not a multiple of `(t + tbar)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotInImage {
    pub reason: String,
}

/// Recognizes classes of the form `c * (t + tbar)^n` and maps them to
/// `c * s^n`; anything else is [`NotInImage`]. The comparison is exact
/// coefficient arithmetic: every term must equal `c * C(n,j)` on
/// `t^(n-j) tbar^j` and no term may lie off that diagonal.
pub fn kclass_to_bordism(k: &KClass, n: u32) -> Result<BordismPolynomial, NotInImage> {
    if k.is_zero() {
        return Ok(BordismPolynomial::zero());
    }
    for ((t_exp, tbar_exp), _) in k.terms() {
        if t_exp + tbar_exp != n {
            return Err(NotInImage {
                reason: format!(
                    "term t^{t_exp}*tbar^{tbar_exp} has total degree {}, expected {n}",
                    t_exp + tbar_exp
                ),
            });
        }
    }
    let scale = k.coefficient(n, 0);
    for j in 0..=n {
        let expected = &scale * binomial(n, j);
        let actual = k.coefficient(n - j, j);
        if actual != expected {
            return Err(NotInImage {
                reason: format!(
                    "coefficient of t^{}*tbar^{j} is {actual}, expected {expected}",
                    n - j
                ),
            });
        }
    }
    Ok(BordismPolynomial::monomial(scale, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::IsotropyData;
    use crate::realization::{rep_sphere_data, sphere_power_data};
    use num_bigint::BigInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn s_power(coeff: i64, degree: u32) -> BordismPolynomial {
        BordismPolynomial::monomial(big(coeff), degree)
    }

    #[test]
    fn sphere_powers_map_to_powers_of_s() {
        assert_eq!(bordism_class(&sphere_power_data(3)).unwrap(), s_power(1, 3));
        assert_eq!(bordism_class(&sphere_power_data(0)).unwrap(), s_power(1, 0));
    }

    #[test]
    fn rep_spheres_are_nullbordant() {
        for n in 1..=4 {
            for j in 0..=n {
                let class = bordism_class(&rep_sphere_data(n, j).unwrap()).unwrap();
                assert!(class.is_zero());
            }
        }
    }

    #[test]
    fn orientation_reversal_negates_the_class() {
        let class = bordism_class(&sphere_power_data(2).reverse_orientation()).unwrap();
        assert_eq!(class, s_power(-1, 2));
    }

    #[test]
    fn bordism_class_propagates_defects() {
        let d = IsotropyData::new(1, [(0, 1)]).unwrap();
        let nr = bordism_class(&d).unwrap_err();
        assert_eq!(nr.defects.len(), 1);
        assert_eq!(nr.defects[0].j, 1);
    }

    #[test]
    fn kclass_recognition_cases() {
        let t_plus_tbar = &KClass::t() + &KClass::tbar();
        assert_eq!(kclass_to_bordism(&t_plus_tbar, 1).unwrap(), s_power(1, 1));

        assert_eq!(
            kclass_to_bordism(&KClass::zero(), 5).unwrap(),
            BordismPolynomial::zero()
        );

        // t^2 + tbar^2 misses the middle binomial coefficient.
        let split = &KClass::monomial(big(1), 2, 0) + &KClass::monomial(big(1), 0, 2);
        let err = kclass_to_bordism(&split, 2).unwrap_err();
        assert!(err.reason.contains("t^1*tbar^1"));

        // Degree mismatch is reported before coefficient comparison.
        let wrong_degree = KClass::monomial(big(1), 1, 0);
        assert!(kclass_to_bordism(&wrong_degree, 2).is_err());
    }

    #[test]
    fn graded_class_sums_components() {
        let class =
            graded_bordism_class(&[sphere_power_data(1), sphere_power_data(2)]).unwrap();
        assert_eq!(class, &s_power(1, 1) + &s_power(1, 2));

        assert_eq!(graded_bordism_class(&[]).unwrap(), BordismPolynomial::zero());

        let cancelling = graded_bordism_class(&[
            sphere_power_data(1),
            sphere_power_data(1).reverse_orientation(),
        ])
        .unwrap();
        assert!(cancelling.is_zero());
    }

    #[test]
    fn graded_class_reports_failing_component() {
        let bad = IsotropyData::new(1, [(1, -1)]).unwrap();
        let err = graded_bordism_class(&[sphere_power_data(1), bad]).unwrap_err();
        assert_eq!(err.index, 1);
    }

    #[test]
    fn polynomial_display() {
        let p = &s_power(2, 2) + &s_power(-1, 0);
        assert_eq!(p.to_string(), "-1 + 2*s^2");
        assert_eq!(BordismPolynomial::zero().to_string(), "0");
        assert_eq!(s_power(1, 1).to_string(), "s");
    }
}
