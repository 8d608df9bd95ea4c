//! Counters shared by both engines, printed as `key: value` lines.

use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub engine: String,
    pub pairs_created: usize,
    pub pairs_processed: usize,
    pub rejected_f5: usize,
    pub rejected_rewrite: usize,
    pub rejected_collision: usize,
    pub rejected_product: usize,
    pub rejected_chain: usize,
    pub reductions_to_zero: usize,
    pub reduction_steps: usize,
    pub splits: usize,
    pub basis_size: usize,
    pub reduced_size: usize,
    /// Polynomials handed to reduction out of signature order.
    pub out_of_order: usize,
    pub admissibility_violations: usize,
    pub part_b_firings: usize,
    pub shadow_disagreements: usize,
}

impl Stats {
    pub fn new(engine: &str) -> Self {
        Self {
            engine: engine.to_string(),
            ..Self::default()
        }
    }

    /// Ordered `(key, value)` pairs of the stats block.
    pub fn rows(&self) -> Vec<(&'static str, String)> {
        vec![
            ("engine", self.engine.clone()),
            ("pairs created", self.pairs_created.to_string()),
            ("pairs processed", self.pairs_processed.to_string()),
            ("rejected by f5 criterion", self.rejected_f5.to_string()),
            (
                "rejected by rewrite criterion",
                self.rejected_rewrite.to_string(),
            ),
            (
                "rejected by signature collision",
                self.rejected_collision.to_string(),
            ),
            (
                "rejected by product criterion",
                self.rejected_product.to_string(),
            ),
            (
                "rejected by chain criterion",
                self.rejected_chain.to_string(),
            ),
            ("reductions to zero", self.reductions_to_zero.to_string()),
            ("reduction steps", self.reduction_steps.to_string()),
            ("splits", self.splits.to_string()),
            ("basis size", self.basis_size.to_string()),
            ("reduced basis size", self.reduced_size.to_string()),
            ("out-of-order reductions", self.out_of_order.to_string()),
            (
                "admissibility violations",
                self.admissibility_violations.to_string(),
            ),
            (
                "improved-criterion part(b) firings",
                self.part_b_firings.to_string(),
            ),
            (
                "improved-criterion disagreements",
                self.shadow_disagreements.to_string(),
            ),
        ]
    }
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.rows() {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}
