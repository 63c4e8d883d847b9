use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element `plus − minus·ε` of ℤ[ε]/(ε² = 1), the Grothendieck ring of
/// finite-dimensional ℤ/2-graded vector spaces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperDimension {
    pub plus: i64,
    pub minus: i64,
}

impl SuperDimension {
    pub fn new(plus: i64, minus: i64) -> Self {
        SuperDimension { plus, minus }
    }

    /// Categorical trace of the identity: `plus − minus`.
    pub fn trace(&self) -> i64 {
        self.plus - self.minus
    }
}

impl Add for SuperDimension {
    type Output = SuperDimension;
    fn add(self, rhs: Self) -> Self {
        SuperDimension::new(self.plus + rhs.plus, self.minus + rhs.minus)
    }
}

/// Graded tensor product: even⊗even and odd⊗odd are even.
impl Mul for SuperDimension {
    type Output = SuperDimension;
    fn mul(self, rhs: Self) -> Self {
        SuperDimension::new(
            self.plus * rhs.plus + self.minus * rhs.minus,
            self.plus * rhs.minus + self.minus * rhs.plus,
        )
    }
}

/// Class of a cohomology with dimensions `b₀..b_{2d}` split by parity of degree:
/// even degrees go to the plus part, odd degrees to the minus part.
pub fn euler_supertrace_class(dims: &[i64]) -> Result<SuperDimension> {
    let mut out = SuperDimension::default();
    for (n, &b) in dims.iter().enumerate() {
        if b < 0 {
            return Err(Error::NegativeDimension { index: n, value: b });
        }
        if n % 2 == 0 {
            out.plus += b;
        } else {
            out.minus += b;
        }
    }
    Ok(out)
}
