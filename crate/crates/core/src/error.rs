use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rectangle dimensions must be positive, got {rows}x{cols}")]
    EmptyRect { rows: u32, cols: u32 },

    #[error("cell ({row},{col}) lies outside the {rows}x{cols} rectangle")]
    CellOutOfBounds { row: u32, col: u32, rows: u32, cols: u32 },

    #[error("missing cell ({row},{col}) is listed more than once")]
    DuplicateMissing { row: u32, col: u32 },

    #[error("at most two missing cells are supported, got {0}")]
    TooManyMissing(usize),

    #[error("shift would detach the missing cell ({row},{col})")]
    ShiftThroughDeficiency { row: u32, col: u32 },

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("the {rows}x{cols} rectangle has no tromino tiling")]
    UntileableRect { rows: u32, cols: u32 },

    #[error("search cap exceeded: {cells} cells, cap is {cap}")]
    CapExceeded { cells: u64, cap: u64 },

    #[error("both dimensions of {rows}x{cols} exceed the profile width cap of {cap}")]
    WidthCap { rows: u32, cols: u32, cap: u32 },

    #[error("area condition fails: {0}")]
    Area(String),

    #[error("generating function denominator has a zero constant term")]
    NoninvertibleConstantTerm,

    #[error("series coefficient {index} is not an integer: {value}")]
    NonIntegralSeries { index: usize, value: String },

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("coloured tiling is not the image of a stretch: {0}")]
    NotInImage(String),

    #[error("no base case covers {0}")]
    MissingBaseCase(String),
}
