//! Generators, the realizability decision, and witness certificates.
//!
//! Two families of generators realize everything realizable: products of the
//! standard 2-sphere ([`sphere_power_data`]) and unit spheres of the
//! representations `V_j` extended by a trivial line ([`rep_sphere_data`]).
//! [`realize`] decides whether given data arises this way — equivalently,
//! whether its signed multiplicities satisfy `m[j] = C(n,j) * m[0]` — and if
//! so emits a [`Witness`] whose decomposition reproduces the data exactly
//! ([`witness_to_data`], [`verify_witness`]).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::chern::binomial;
use crate::data::IsotropyData;
use crate::error::Error;

/// A realizability certificate: `m0` signed copies of the n-fold sphere
/// power (negative `m0` meaning orientation-reversed) plus `rep_spheres[j]`
/// copies of the j-th representation sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    n: u32,
    m0: BigInt,
    rep_spheres: Vec<BigUint>,
}

impl Witness {
    pub fn new(n: u32, m0: BigInt, rep_spheres: Vec<BigUint>) -> Result<Witness, Error> {
        let expected = n as usize + 1;
        if rep_spheres.len() != expected {
            return Err(Error::TableLength {
                field: "rep_spheres",
                expected,
                actual: rep_spheres.len(),
            });
        }
        Ok(Witness { n, m0, rep_spheres })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Signed number of sphere-power copies.
    pub fn m0(&self) -> &BigInt {
        &self.m0
    }

    /// Copies of the j-th representation sphere, for `j = 0..=n`.
    pub fn rep_spheres(&self) -> &[BigUint] {
        &self.rep_spheres
    }
}

/// Per-weight failure of the binomial multiplicity pattern:
/// `residual = m[j] - C(n,j) * m[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub j: u32,
    pub residual: BigInt,
}

/// The structured negative outcome of [`realize`]: every weight whose
/// multiplicity defies the binomial pattern, with its residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotRealizable {
    pub defects: Vec<Defect>,
}

impl fmt::Display for NotRealizable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not realizable;")?;
        for d in &self.defects {
            write!(f, " j={}: residual {}", d.j, d.residual)?;
        }
        Ok(())
    }
}

/// Isotropy data of the n-fold power of the standard 2-sphere with the
/// diagonal action: `C(n,j)` positively oriented points of weight `j`, for
/// a total of `2^n` points.
pub fn sphere_power_data(n: u32) -> IsotropyData {
    let m_plus: Vec<BigUint> = (0..=n)
        .map(|j| binomial(n, j).to_biguint().expect("binomial is nonnegative"))
        .collect();
    let m_minus = vec![BigUint::zero(); n as usize + 1];
    IsotropyData::from_multiplicities(n, &m_plus, &m_minus)
        .expect("vectors have length n + 1 by construction")
}

/// Isotropy data of the unit sphere of `V_j` plus a trivial real line: two
/// points of weight `j` with opposite signs.
pub fn rep_sphere_data(n: u32, j: u32) -> Result<IsotropyData, Error> {
    if j > n {
        return Err(Error::IndexOutOfRange { j, n });
    }
    IsotropyData::new(n, [(j as u64, 1), (j as u64, -1)])
}

/// Decides realizability.
///
/// Succeeds exactly when `m[j] = C(n,j) * m[0]` for every `j`; the witness
/// then takes `rep_spheres[j] = m_minus[j]` when `m0 >= 0` and
/// `rep_spheres[j] = m_plus[j]` when `m0 < 0`, so that
/// [`witness_to_data`] reproduces the input as a multiset.
pub fn realize(d: &IsotropyData) -> Result<Witness, NotRealizable> {
    let n = d.n();
    let table = d.multiplicities();
    let m0 = table.m()[0].clone();

    let mut defects = Vec::new();
    for j in 1..=n {
        let residual = &table.m()[j as usize] - binomial(n, j) * &m0;
        if !residual.is_zero() {
            defects.push(Defect { j, residual });
        }
    }
    if !defects.is_empty() {
        return Err(NotRealizable { defects });
    }

    let rep_spheres = if m0.is_negative() {
        table.m_plus().to_vec()
    } else {
        table.m_minus().to_vec()
    };
    Ok(Witness { n, m0, rep_spheres })
}

/// Expands a witness back into isotropy data: `|m0|` sphere powers (all
/// signs flipped when `m0 < 0`) together with `rep_spheres[j]` copies of
/// each representation sphere. Multiplicities are combined arithmetically,
/// so huge counts stay cheap.
pub fn witness_to_data(w: &Witness) -> IsotropyData {
    let n = w.n;
    let len = n as usize + 1;
    let magnitude = w.m0.magnitude();
    let mut m_plus = vec![BigUint::zero(); len];
    let mut m_minus = vec![BigUint::zero(); len];
    for j in 0..=n {
        let powers = binomial(n, j).to_biguint().expect("binomial is nonnegative") * magnitude;
        if w.m0.is_negative() {
            m_minus[j as usize] += powers;
        } else {
            m_plus[j as usize] += powers;
        }
        m_plus[j as usize] += &w.rep_spheres[j as usize];
        m_minus[j as usize] += &w.rep_spheres[j as usize];
    }
    IsotropyData::from_multiplicities(n, &m_plus, &m_minus)
        .expect("vectors have length n + 1 by construction")
}

/// True iff the witness expands to exactly the given multiset.
pub fn verify_witness(d: &IsotropyData, w: &Witness) -> bool {
    witness_to_data(w) == *d
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn counts(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn sphere_power_small_cases() {
        let s2 = sphere_power_data(1);
        assert_eq!(s2, IsotropyData::new(1, [(0, 1), (1, 1)]).unwrap());

        let point = sphere_power_data(0);
        assert_eq!(point.point_count(), BigUint::one());
        assert_eq!(point.count(0, crate::data::Sign::Plus), BigUint::one());

        let cube = sphere_power_data(3);
        assert_eq!(cube.multiplicities().m_plus(), counts(&[1, 3, 3, 1]).as_slice());
        assert_eq!(cube.point_count(), BigUint::from(8u32));
    }

    #[test]
    fn rep_sphere_small_cases() {
        let d = rep_sphere_data(1, 0).unwrap();
        assert_eq!(d, IsotropyData::new(1, [(0, 1), (0, -1)]).unwrap());

        let d = rep_sphere_data(3, 3).unwrap();
        assert_eq!(d, IsotropyData::new(3, [(3, 1), (3, -1)]).unwrap());

        assert!(rep_sphere_data(2, 3).is_err());
        assert!(rep_sphere_data(3, 3).unwrap().k_class().is_zero());
    }

    #[test]
    fn realize_sphere_square_is_its_own_witness() {
        let w = realize(&sphere_power_data(2)).unwrap();
        assert_eq!(*w.m0(), big(1));
        assert_eq!(w.rep_spheres(), counts(&[0, 0, 0]).as_slice());
    }

    #[test]
    fn realize_rejects_lone_point() {
        let d = IsotropyData::new(1, [(0, 1)]).unwrap();
        let nr = realize(&d).unwrap_err();
        assert_eq!(nr.defects, vec![Defect { j: 1, residual: big(-1) }]);
    }

    #[test]
    fn realize_rep_sphere_is_nullbordant() {
        let w = realize(&rep_sphere_data(2, 1).unwrap()).unwrap();
        assert_eq!(*w.m0(), big(0));
        assert_eq!(w.rep_spheres(), counts(&[0, 1, 0]).as_slice());
    }

    #[test]
    fn witness_expansion_cases() {
        let w = Witness::new(1, big(1), counts(&[0, 0])).unwrap();
        assert_eq!(witness_to_data(&w), sphere_power_data(1));

        let w = Witness::new(2, big(0), counts(&[0, 2, 0])).unwrap();
        let d = witness_to_data(&w);
        assert_eq!(d.point_count(), BigUint::from(4u32));
        let table = d.multiplicities();
        assert_eq!(table.m_plus(), counts(&[0, 2, 0]).as_slice());
        assert_eq!(table.m_minus(), counts(&[0, 2, 0]).as_slice());

        let w = Witness::new(1, big(-1), counts(&[0, 0])).unwrap();
        assert_eq!(
            witness_to_data(&w),
            IsotropyData::new(1, [(0, -1), (1, -1)]).unwrap()
        );
    }

    #[test]
    fn verify_witness_cases() {
        let d = sphere_power_data(3);
        let w = realize(&d).unwrap();
        assert!(verify_witness(&d, &w));

        let off = Witness::new(3, w.m0() + big(1), w.rep_spheres().to_vec()).unwrap();
        assert!(!verify_witness(&d, &off));

        let d = rep_sphere_data(2, 0).unwrap();
        let w = Witness::new(2, big(0), counts(&[1, 0, 0])).unwrap();
        assert!(verify_witness(&d, &w));
    }

    #[test]
    fn realize_handles_dimension_zero() {
        // Two positive and one negative point at n = 0.
        let d = IsotropyData::new(0, [(0, 1), (0, 1), (0, -1)]).unwrap();
        let w = realize(&d).unwrap();
        assert_eq!(*w.m0(), big(1));
        assert_eq!(w.rep_spheres(), counts(&[1]).as_slice());
        assert!(verify_witness(&d, &w));
    }

    #[test]
    fn realize_with_negative_base_count() {
        let d = sphere_power_data(2).reverse_orientation();
        let w = realize(&d).unwrap();
        assert_eq!(*w.m0(), big(-1));
        assert_eq!(w.rep_spheres(), counts(&[0, 0, 0]).as_slice());
        assert!(verify_witness(&d, &w));
    }

    #[test]
    fn witness_length_is_checked() {
        assert!(Witness::new(2, big(1), counts(&[0, 0])).is_err());
    }
}
