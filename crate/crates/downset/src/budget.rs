//! Resource caps for the exponential-sum operations.

/// Caps on the exhaustive paths plus the opt-in thread count.
///
/// The inclusion–exclusion sums and the Berge dualization are exponential in
/// the worst case; every such operation takes a `Budget` and fails with
/// [`Error::TermBudgetExceeded`](crate::Error::TermBudgetExceeded) instead of
/// running away. `oracle_cap` bounds the ground size for the brute-force
/// `2^n` enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of aggregate entries (or direct subset terms) in an
    /// inclusion–exclusion sum, and maximum intermediate antichain size
    /// during Berge multiplication.
    pub term_cap: u64,
    /// Maximum ground size for full `2^n` enumeration.
    pub oracle_cap: usize,
    /// Worker threads for partitionable enumerations. Results are
    /// bit-identical for every value.
    pub threads: usize,
}

impl Budget {
    pub const DEFAULT_TERM_CAP: u64 = 1 << 26;
    pub const DEFAULT_ORACLE_CAP: usize = 20;

    /// Direct subset enumeration is used up to this family size; larger
    /// families go through mask aggregation.
    pub const DIRECT_ENUM_MAX_FAMILY: usize = 20;

    pub fn with_term_cap(mut self, cap: u64) -> Self {
        self.term_cap = cap;
        self
    }

    pub fn with_oracle_cap(mut self, cap: usize) -> Self {
        self.oracle_cap = cap;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            term_cap: Self::DEFAULT_TERM_CAP,
            oracle_cap: Self::DEFAULT_ORACLE_CAP,
            threads: 1,
        }
    }
}
