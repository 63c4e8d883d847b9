use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::points::expr::{parse_polynomial, IntPoly};
use crate::points::field::FieldTower;

fn default_r() -> u32 {
    1
}

/// On-disk form of a projective scheme.
///
/// ```json
/// { "p": 5, "r": 1, "vars": ["x","y","z"], "equations": ["y^2*z - x^3 - x*z^2 - z^3"], "label": "E/F5" }
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeInput {
    pub p: u64,
    #[serde(default = "default_r")]
    pub r: u32,
    pub vars: Vec<String>,
    #[serde(default)]
    pub equations: Vec<String>,
    #[serde(default)]
    pub label: String,
    /// Dimension `d`, if known. Otherwise it is inferred from the
    /// functional equation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
}

/// Closed subscheme of `ℙ^{N}` over `𝔽_q` cut out by homogeneous integer
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveScheme {
    pub p: u64,
    pub r: u32,
    pub vars: Vec<String>,
    pub equations: Vec<IntPoly>,
    pub dim_hint: Option<u32>,
    pub label: String,
}

impl ProjectiveScheme {
    pub fn from_input(input: &SchemeInput) -> Result<Self> {
        FieldTower::new(input.p, input.r)?;
        if input.vars.is_empty() {
            return Err(Error::Parse("vars: at least one homogeneous coordinate is required".into()));
        }
        for (i, v) in input.vars.iter().enumerate() {
            if input.vars[..i].contains(v) {
                return Err(Error::Parse(format!("vars: duplicate variable {v:?}")));
            }
        }
        let mut equations = Vec::with_capacity(input.equations.len());
        for (index, src) in input.equations.iter().enumerate() {
            let poly = parse_polynomial(src, &input.vars)
                .map_err(|e| Error::Parse(format!("equations[{index}]: {e}")))?;
            if poly.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous { index });
            }
            equations.push(poly);
        }
        Ok(ProjectiveScheme {
            p: input.p,
            r: input.r,
            vars: input.vars.clone(),
            equations,
            dim_hint: input.dim,
            label: input.label.clone(),
        })
    }

    /// `ℙᴺ` over `𝔽_{pʳ}`.
    pub fn projective_space(p: u64, r: u32, n: usize) -> Result<Self> {
        let input = SchemeInput {
            p,
            r,
            vars: (0..=n).map(|i| format!("x{i}")).collect(),
            equations: Vec::new(),
            label: format!("P{n}"),
            dim: Some(n as u32),
        };
        Self::from_input(&input)
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn base_q(&self) -> u64 {
        self.p.pow(self.r)
    }

    pub fn tower(&self) -> FieldTower {
        FieldTower::new(self.p, self.r).expect("validated on construction")
    }
}
