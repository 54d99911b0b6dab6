//! Size limits guarding the exponential-cost entry points.
//!
//! Diagram enumeration, hair truncation, and Λ-element construction all
//! grow combinatorially with degree; the limits keep a mistyped request
//! from running away. Callers that really want more can pass larger
//! values (the command-line tool exposes `--max-degree`).

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest diagram degree the enumerator will accept.
    pub max_degree: usize,
    /// Largest truncation order for hair expansions.
    pub max_truncation: usize,
    /// Largest degree for Λ-element constructions.
    pub max_lambda_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 6,
            max_truncation: 7,
            max_lambda_degree: 5,
        }
    }
}

impl Limits {
    pub fn with_max_degree(max_degree: usize) -> Self {
        Limits {
            max_degree,
            ..Limits::default()
        }
    }
}
