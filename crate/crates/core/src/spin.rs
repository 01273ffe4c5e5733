//! Parities of partitions and the predicted reduced decomposition numbers
//! `2^(x_h(lam)/2) d_{lam,mu}(1)` for spin blocks.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::CanonicalBasisMatrix;
use crate::partitions::{HParams, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(count: usize) -> Parity {
        if count.is_multiple_of(2) { Parity::Even } else { Parity::Odd }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity of the number of positive even parts of a strict partition.
pub fn parity(lam: &Partition) -> Result<Parity> {
    if !lam.is_strict() {
        return Err(Error::MalformedPartition(alloc::format!("{lam} is not strict")));
    }
    Ok(Parity::of(lam.parts().iter().filter(|&&a| a % 2 == 0).count()))
}

/// Parity of the number of nodes of nonzero residue.
pub fn h_parity(lam: &Partition, p: HParams) -> Parity {
    Parity::of(lam.nodes().filter(|x| p.residue(x.col) != 0).count())
}

/// Number of positive parts divisible by `h`.
pub fn n_h(lam: &Partition, p: HParams) -> u32 {
    lam.parts().iter().filter(|&&a| a % p.h() == 0).count() as u32
}

/// Shift added to `n_h`, indexed by (parity, h-parity).
const X_SHIFT: [[i32; 2]; 2] = [[0, 1], [-1, 0]];

fn index(x: Parity) -> usize {
    match x {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

pub fn x_h(lam: &Partition, p: HParams) -> Result<i32> {
    let shift = X_SHIFT[index(parity(lam)?)][index(h_parity(lam, p))];
    Ok(n_h(lam, p) as i32 + shift)
}

/// `mantissa * 2^(half_power/2)`, kept exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinPrediction {
    pub lambda: Partition,
    pub mu: Partition,
    pub d_at_one: BigInt,
    pub x_h: i32,
    pub mantissa: BigInt,
    pub half_power: i32,
}

impl SpinPrediction {
    /// The power of 2 is not an integer.
    pub fn odd_half_power(&self) -> bool {
        self.half_power % 2 != 0
    }

    /// The value when it is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.mantissa.is_zero() {
            return Some(BigInt::zero());
        }
        if self.odd_half_power() || self.half_power < 0 {
            return None;
        }
        Some(&self.mantissa << (self.half_power / 2) as usize)
    }
}

impl fmt::Display for SpinPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}*2^({}/2)", self.mantissa, self.half_power),
        }
    }
}

pub fn predict_reduced(lam: &Partition, mu: &Partition, d: &LaurentPoly, p: HParams) -> Result<SpinPrediction> {
    let x = x_h(lam, p)?;
    let d1 = d.eval_at_one();
    let half_power = if d1.is_zero() { 0 } else { x };
    Ok(SpinPrediction {
        lambda: lam.clone(),
        mu: mu.clone(),
        d_at_one: d1.clone(),
        x_h: x,
        mantissa: d1,
        half_power,
    })
}

/// Predictions for every nonzero entry with a strict row label.
pub fn predict_matrix(m: &CanonicalBasisMatrix) -> Result<Vec<SpinPrediction>> {
    let p = m.block().params;
    let mut out = Vec::new();
    for (lam, row) in m.rows().iter().zip(m.entries()) {
        if !lam.is_strict() {
            continue;
        }
        for (mu, d) in m.cols().iter().zip(row) {
            if !d.is_zero() {
                out.push(predict_reduced(lam, mu, d, p)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        let p = HParams::new(5).unwrap();
        assert_eq!(parity(&pt("(5,4)")).unwrap(), Parity::Odd);
        assert_eq!(n_h(&pt("(10,5,1)"), p), 2);
        assert_eq!(h_parity(&Partition::empty(), p), Parity::Even);
        assert!(parity(&pt("(5,5)")).is_err());
        let z = predict_reduced(&pt("(6)"), &pt("(6)"), &LaurentPoly::zero(), p).unwrap();
        assert_eq!(z.as_integer(), Some(BigInt::zero()));
    }
}
