use crate::element::WeylElement;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("[y, x] = {commutator}, expected 1")]
    NotAnEndomorphism { commutator: WeylElement },
    #[error("endomorphism pair has not been verified")]
    Unverified,
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("weight ({rho}, {eta}) must have positive entries")]
    NonPositiveWeight { rho: i64, eta: i64 },
    #[error("weight ({rho}, {eta}) is not generic for the element")]
    NotGeneric { rho: i64, eta: i64 },
    #[error("no generic weight with entries up to {bound}")]
    NoGenericWeight { bound: i64 },
    #[error("image of {source_elem} has monomial Y^{y}*X^{x} outside the target window (cap {cap})")]
    WindowEscape {
        source_elem: WeylElement,
        y: u32,
        x: u32,
        cap: i64,
    },
    #[error("image {image} of {source_elem} is not in the target subspace")]
    NotInTarget {
        source_elem: WeylElement,
        image: WeylElement,
    },
    #[error("chain basis: {0}")]
    Chain(String),
    #[error("semigroup horizon {horizon} too small to certify gaps")]
    HorizonTooSmall { horizon: u64 },
    #[error("invalid semigroup generators: {0}")]
    BadGenerators(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid document: {0}")]
    Document(String),
    #[error("invalid linear generator: ad - bc = {0}, expected 1")]
    BadLinearGenerator(crate::scalar::Rat),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
