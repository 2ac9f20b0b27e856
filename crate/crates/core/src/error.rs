use thiserror::Error;

/// Errors raised while building or validating algebraic objects.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("empty table")]
    Empty,
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: entry at ({row}, {col}) repeats within its {axis}")]
    NotLatin {
        row: usize,
        col: usize,
        axis: &'static str,
    },
    #[error("index 0 is not a two-sided identity (fails at element {element})")]
    NoIdentityAtZero { element: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("action is not by automorphisms: element {element} fails at ({a}, {b})")]
    NotAutomorphismAction { element: usize, a: usize, b: usize },
    #[error("not a group action: {0}")]
    NotAnAction(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("star table invalid: {0}")]
    StarInvalid(Box<Error>),
    #[error("dot table invalid: {0}")]
    DotInvalid(Box<Error>),
    #[error("star and dot tables have different orders ({star} vs {dot})")]
    OrderMismatch { star: usize, dot: usize },
    #[error("skew brace axiom fails at ({a}, {b}, {c})")]
    AxiomFails { a: usize, b: usize, c: usize },
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("subgroup of the holomorph is not regular: {0}")]
    NotRegular(String),
    #[error("a left brace (commutative star group) is required")]
    NotALeftBrace,
    #[error("brace socle is not trivial (order {0})")]
    SocleNotTrivial(usize),

    #[error("r is not a bijection of X x X: ({x}, {y}) collides")]
    NotBijective { x: usize, y: usize },
    #[error("Yang-Baxter equation fails at ({x}, {y}, {z})")]
    YbeFails { x: usize, y: usize, z: usize },
    #[error("solution is degenerate")]
    NondegenerateRequired,
    #[error("solution is not involutive")]
    InvolutiveRequired,
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("construction spec invalid: {0}")]
    SpecInvalid(String),
    #[error("hypothesis '{name}' fails: {witness}")]
    HypothesisFails { name: &'static str, witness: String },
    #[error("certificate invalid: equation {equation} fails at orbit {i}, family {j}")]
    CertificateInvalid { equation: u8, i: usize, j: usize },
    #[error("chosen conjugacy classes do not generate the group")]
    GenerationFails,
    #[error("core of the subgroup intersection is not trivial")]
    CoreFails,

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
