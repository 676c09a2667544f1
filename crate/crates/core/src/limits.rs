/// Size caps for the factorial-sized searches. Every operation that could
/// run away refuses inputs beyond its cap with [`crate::Error::CapExceeded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `m` for which the exact value-separated family is searched.
    pub exact_two_diff_max_m: usize,
    /// Largest family materialized by an explicit enumeration.
    pub output_cap: u128,
    /// Largest universe a greedy pass will walk.
    pub greedy_universe_cap: u128,
    /// Largest compatibility graph the oracle will build.
    pub oracle_vertex_cap: usize,
    /// Largest `n` for the exact incompatibility count.
    pub count_incompatible_max_n: usize,
    pub q_max_n: usize,
    pub b_max_n: usize,
    pub r_max_n: usize,
    pub mcy_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact_two_diff_max_m: 6,
            output_cap: 3_628_800,
            greedy_universe_cap: 3_628_800,
            oracle_vertex_cap: 10_000,
            count_incompatible_max_n: 9,
            q_max_n: 7,
            b_max_n: 9,
            r_max_n: 6,
            mcy_max_n: 7,
        }
    }
}
