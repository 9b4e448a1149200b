//! Crate-wide error type.

use std::fmt;

/// Errors raised by exact computations in this crate.
///
/// Every operation either returns an exact value or one of these; nothing is
/// ever approximated to avoid an error path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division by zero in a field or ring.
    DivisionByZero,
    /// An operation that requires a nonzero polynomial received zero.
    ZeroPolynomial,
    /// An operation that requires a nonconstant polynomial received a constant.
    ConstantPolynomial,
    /// A named constant was requested that this field does not provide.
    UnknownConstant(String),
    /// A place cluster splits against the given data; the caller must refine
    /// the basis before valuations at this cluster are well defined.
    ClusterSplits,
    /// Model coefficients are not polynomials (condition for integrality fails).
    NonIntegralModel,
    /// The model is singular (vanishing discriminant).
    SingularModel,
    /// The model is not globally minimal where minimality is required.
    NotMinimal(String),
    /// A coordinate change with u = 0.
    InvalidCoordinateChange,
    /// Some `deg a_i > n*i`, so the requested chart at infinity does not exist.
    DegreeOverflow,
    /// Valuation pattern matches no entry of the reduction table.
    UnclassifiableFiber(String),
    /// A point does not satisfy the curve equation.
    PointNotOnCurve,
    /// The point at infinity was supplied where an affine point is required.
    InfinitePoint,
    /// Local height correction requested at an additive fiber.
    AdditiveFiber,
    /// `min{v(y), v(Delta)/2}` is a half-integer at an odd `I_n` fiber; no
    /// convention is adopted, the caller is told instead.
    AmbiguousOddFiber,
    /// Input outside the supported curve family.
    OutOfFamily(String),
    /// Not a 2-torsion point where one is required.
    NotTwoTorsion,
    /// Division polynomial index outside the supported range.
    UnsupportedOrder(u32),
    /// A square-class constant whose squareness could not be decided.
    UndeterminedSquareClass,
    /// `descent` applied at an excluded 2-torsion patch.
    DescentPatch,
    /// A certificate stage failed; carries the stage name and reason.
    CertificateStage { stage: String, reason: String },
    /// The supplied base point does not lie on the quadric.
    PointNotOnQuadric,
    /// The conic is degenerate and admits no quadratic parametrization.
    DegenerateConic,
    /// Specialization parameter hits a singular fiber.
    SingularSpecialization,
    /// Specialization parameter is a pole of the parametrization.
    ParametrizationPole,
    /// Requested member of the rank-3 set is excluded as degenerate.
    DegenerateMember(String),
    /// Malformed JSON input.
    Json(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::ConstantPolynomial => write!(f, "constant polynomial not allowed here"),
            Error::UnknownConstant(name) => write!(f, "unknown named constant: {name}"),
            Error::ClusterSplits => write!(f, "place cluster splits; refine the basis first"),
            Error::NonIntegralModel => write!(f, "model coefficients are not polynomials"),
            Error::SingularModel => write!(f, "singular model (discriminant is zero)"),
            Error::NotMinimal(place) => write!(f, "model is not minimal at {place}"),
            Error::InvalidCoordinateChange => write!(f, "coordinate change with u = 0"),
            Error::DegreeOverflow => write!(f, "coefficient degree exceeds n*i for the chart"),
            Error::UnclassifiableFiber(detail) => write!(f, "unclassifiable fiber: {detail}"),
            Error::PointNotOnCurve => write!(f, "point does not satisfy the curve equation"),
            Error::InfinitePoint => write!(f, "affine point required"),
            Error::AdditiveFiber => write!(f, "local correction defined only at I_n fibers"),
            Error::AmbiguousOddFiber => {
                write!(f, "ambiguous component index at an odd I_n fiber")
            }
            Error::OutOfFamily(detail) => write!(f, "input outside the family: {detail}"),
            Error::NotTwoTorsion => write!(f, "point is not 2-torsion"),
            Error::UnsupportedOrder(n) => write!(f, "unsupported division polynomial index {n}"),
            Error::UndeterminedSquareClass => write!(f, "undetermined square-class constant"),
            Error::DescentPatch => write!(f, "descent map undefined at this 2-torsion patch"),
            Error::CertificateStage { stage, reason } => {
                write!(f, "certificate stage '{stage}' failed: {reason}")
            }
            Error::PointNotOnQuadric => write!(f, "base point does not lie on the quadric"),
            Error::DegenerateConic => write!(f, "degenerate conic"),
            Error::SingularSpecialization => write!(f, "specialization hits a singular fiber"),
            Error::ParametrizationPole => write!(f, "specialization at a parametrization pole"),
            Error::DegenerateMember(detail) => write!(f, "degenerate member: {detail}"),
            Error::Json(detail) => write!(f, "malformed input: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
