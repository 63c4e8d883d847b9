use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{RatMatrix, Rational};

/// One simple factor of a split semisimple algebra: the component of the
/// endomorphism as a matrix, with its exponent `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub matrix: RatMatrix,
    pub mu: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleBlockData {
    pub blocks: Vec<Block>,
}

/// `∏ᵢ Nrdᵢ^{μᵢ}` where in the split case the reduced norm is the matrix determinant.
pub fn determinant(b: &SemisimpleBlockData) -> Result<Rational> {
    let mut out = Rational::one();
    for (index, block) in b.blocks.iter().enumerate() {
        let d = block.matrix.determinant()?;
        if d.is_zero() {
            return Err(Error::SingularBlock { index });
        }
        out *= &d.pow(block.mu);
    }
    Ok(out)
}
