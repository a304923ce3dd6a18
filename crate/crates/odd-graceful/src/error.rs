use thiserror::Error;

/// Errors produced by graph construction, labeling, verification, search,
/// and document handling.
#[derive(Debug, Error)]
pub enum Error {
    /// Grids need at least two rows and two lines; anything smaller has an
    /// empty label codomain.
    #[error("dimensions too small: n = {n}, m = {m} (both must be at least 2)")]
    DimensionTooSmall { n: u32, m: u32 },

    /// The label codomain bound 4(n-1)(m-1) does not fit the platform's
    /// safe integer range.
    #[error("dimensions overflow: 4(n-1)(m-1) exceeds u64 for n = {n}, m = {m}")]
    DimensionOverflow { n: u32, m: u32 },

    #[error("vertex ({i}, {j}) out of range for a {n} x {m} grid")]
    VertexOutOfRange { i: u32, j: u32, n: u32, m: u32 },

    /// `inner_line_label` was asked for the final line of an odd m > 3 grid,
    /// which is governed by the override formula instead.
    #[error("line {j} of a grid with m = {m} uses the final-line override, not the inner-line formula")]
    FinalLineOverride { j: u32, m: u32 },

    /// The final-line override only exists for odd m > 3.
    #[error("final-line override does not apply: m = {m} is not an odd number greater than 3")]
    OverrideNotApplicable { m: u32 },

    #[error("closed-form labeling is only defined for 2 <= m <= 6, got m = {m}")]
    ClosedFormUnavailable { m: u32 },

    /// `search` tags labelings it finds, but it is not a constructive method.
    #[error("method '{0}' cannot be used to compute labels")]
    MethodNotConstructive(String),

    #[error("labeling is for a {fn_n} x {fn_m} grid but the graph is {g_n} x {g_m}")]
    DimensionMismatch {
        g_n: u32,
        g_m: u32,
        fn_n: u32,
        fn_m: u32,
    },

    /// The requested edge leaves the grid and is discarded before prediction.
    #[error("edge from row {i} on line {j} toward row {target} is muffled: target row outside 1..={n}")]
    MuffledEdge { i: u32, j: u32, target: i64, n: u32 },

    #[error("search budget must allow at least one node")]
    InvalidBudget,

    #[error("labeling document is not valid JSON: {0}")]
    Parse(#[from] serde_json::Error),

    /// Structurally valid document whose contents break a coverage or
    /// consistency rule.
    #[error("labeling document is semantically invalid: {0}")]
    Semantic(String),

    #[error("unsupported export format: {0}")]
    UnsupportedFormat(String),

    #[error("invalid range '{0}': expected 'A..B' (inclusive) or a single value")]
    InvalidRange(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
