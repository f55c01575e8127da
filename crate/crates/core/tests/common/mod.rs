//! Shared helpers for the property suites. Oracles here (Pascal binomials,
//! composition enumeration) are independent of the library's closed-form
//! code paths.
#![allow(dead_code)]

use isokit_core::oracle::{enumerate_data, random_data, SplitMix64};
use isokit_core::realization::witness_to_data;
use isokit_core::{BigInt, BigUint, IsotropyData, Witness};

/// Binomial coefficients by Pascal's rule only.
pub fn pascal(n: u32, k: u32) -> BigInt {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1)];
        for pair in row.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

/// True iff the signed multiplicities follow `m[j] = C(n,j) * m[0]`,
/// checked against Pascal binomials.
pub fn binomial_pattern_holds(d: &IsotropyData) -> bool {
    let table = d.multiplicities();
    let m0 = table.m()[0].clone();
    (0..=d.n()).all(|j| table.m()[j as usize] == pascal(d.n(), j) * &m0)
}

/// Every data value with dimension `<= max_n` and per-`(j, sign)` counts
/// `<= max_count`.
pub fn exhaustive_population(max_n: u32, max_count: u32) -> Vec<IsotropyData> {
    (0..=max_n)
        .flat_map(|n| enumerate_data(n, max_count).unwrap())
        .collect()
}

/// The exhaustive population restricted to at most `max_points` points.
pub fn small_population(max_n: u32, max_points: u64) -> Vec<IsotropyData> {
    exhaustive_population(max_n, 3)
        .into_iter()
        .filter(|d| d.point_count() <= BigUint::from(max_points))
        .collect()
}

/// Data expanded from a random witness; realizable by construction.
pub fn random_witness_data(n: u32, rng: &mut SplitMix64) -> IsotropyData {
    let m0 = rng.below(5) as i64 - 2;
    let rep_spheres: Vec<BigUint> = (0..=n).map(|_| BigUint::from(rng.below(3))).collect();
    let witness = Witness::new(n, BigInt::from(m0), rep_spheres).unwrap();
    witness_to_data(&witness)
}

/// Seeded population mixing raw random data, realizable data, and
/// one-point perturbations of realizable data, with dimensions `<= max_n`.
pub fn mixed_population(max_n: u32, cases: usize, seed: u64) -> Vec<IsotropyData> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(cases);
    while out.len() < cases {
        let n = rng.below(max_n as u64 + 1) as u32;
        let d = match out.len() % 3 {
            0 => {
                let points = rng.below(9) as u32;
                random_data(n, points, rng.next_u64())
            }
            1 => random_witness_data(n, &mut rng),
            _ => {
                let base = random_witness_data(n, &mut rng);
                let j = rng.below(n as u64 + 1);
                let sign = if rng.below(2) == 0 { 1 } else { -1 };
                let extra = IsotropyData::new(n, [(j, sign)]).unwrap();
                base.disjoint_union(&extra).unwrap()
            }
        };
        out.push(d);
    }
    out
}

/// All ordered lists of positive integers summing to `total`.
pub fn compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for rest in compositions(total - first) {
            let mut entry = Vec::with_capacity(rest.len() + 1);
            entry.push(first);
            entry.extend(rest);
            out.push(entry);
        }
    }
    out
}
