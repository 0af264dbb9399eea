use thiserror::Error;

/// Errors raised by the exact-arithmetic, geometry and lattice routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at a pole")]
    Pole,

    #[error("base point of parametrization: all six coordinates vanish at t = {0}")]
    BasePoint(String),

    #[error("parametrization is identically trivial: factor {0} of q vanishes identically")]
    IdenticallyTrivial(String),

    #[error("point is not on the Weierstrass model")]
    NotOnCurve,

    #[error("singular Weierstrass model (discriminant vanishes identically)")]
    SingularModel,

    #[error("unimplemented residue extension: bad place {0} is not rational")]
    ResidueExtension(String),

    #[error("model is not minimal at place {0}")]
    NotMinimal(String),

    #[error("degenerate change of variables: {0} vanishes identically")]
    DegenerateDenominator(&'static str),

    #[error("undecidable fiber component at place {0}")]
    UndecidableComponent(String),

    #[error("u(S) equals e; use another e")]
    UseAnotherE,

    #[error("scaling factor must be nonzero")]
    ZeroScale,

    #[error("vectors are rank deficient")]
    RankDeficient,

    #[error("lattice is degenerate")]
    Degenerate,

    #[error("lattice is not even and integral; the discriminant form is undefined")]
    NotEvenIntegral,

    #[error("Gram matrix is not positive definite")]
    NotDefinite,

    #[error("degree must be even")]
    OddDegree,

    #[error("class has self-intersection {0}, expected -2")]
    NotMinusTwo(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("data integrity check failed: {0}")]
    Integrity(String),

    #[error("tangent directions coincide at singular point {0}; local intersection left unresolved")]
    UnresolvedTangency(String),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
