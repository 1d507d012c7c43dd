use alloc::collections::BTreeMap;
use alloc::vec;

use num_integer::Integer;

use crate::abgroup::FgAbGroup;
use crate::graded::{Eigenvalues, GradedPiece, RootOfUnity, VanishingData};
use crate::{Error, Result};

pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// Vanishing data of `x1^a1 + … + xn^an` by listing every tuple
/// `(k1, …, kn)` with `1 <= ki < ai` and recording `Σ ki/ai mod 1`.
///
/// Shares no code with the join: sums are taken over the common denominator
/// `lcm(ai)` in plain integers.
pub fn pham_enumerate(exponents: &[i64], bound: u64) -> Result<VanishingData> {
    if exponents.is_empty() {
        return Err(Error::domain("pham needs at least one exponent"));
    }
    if let Some(a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::domain(alloc::format!(
            "pham exponents must be at least 2, got {a}"
        )));
    }
    let exps: vec::Vec<u64> = exponents.iter().map(|&a| a as u64).collect();
    let needed = exps
        .iter()
        .try_fold(1u128, |acc, &a| acc.checked_mul((a - 1) as u128))
        .unwrap_or(u128::MAX);
    if needed > bound as u128 {
        return Err(Error::Resource { needed, bound });
    }

    let modulus = exps.iter().fold(1u64, |l, &a| l.lcm(&a));
    let steps: vec::Vec<u64> = exps.iter().map(|&a| modulus / a).collect();

    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    let mut k = vec![1u64; exps.len()];
    let mut sum: u64 = steps.iter().fold(0, |s, &st| (s + st) % modulus);
    loop {
        *counts.entry(sum).or_default() += 1;
        // odometer increment, keeping `sum` in step
        let mut i = 0;
        loop {
            if i == exps.len() {
                let mut eigenvalues = Eigenvalues::new();
                for (r, c) in counts {
                    eigenvalues.insert(RootOfUnity::new(r as i64, modulus), c);
                }
                let rank = needed as usize;
                let piece = GradedPiece::new(FgAbGroup::free(rank), eigenvalues)?;
                return Ok(VanishingData::single(exps.len() as i64, piece));
            }
            if k[i] + 1 < exps[i] {
                k[i] += 1;
                sum = (sum + steps[i]) % modulus;
                break;
            }
            // wrap ki back to 1
            sum = (sum + modulus - (k[i] - 1) * steps[i] % modulus) % modulus;
            k[i] = 1;
            i += 1;
        }
    }
}
