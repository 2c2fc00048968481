use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least 3 exponents, got {0}")]
    TooFewExponents(usize),

    #[error("every exponent must be at least 2, got {0}")]
    ExponentTooSmall(u64),

    #[error("link dimension {0} is too small; the classification needs dimension >= 5")]
    DimensionTooSmall(u32),

    #[error("the signature needs an odd number of exponents, got {0}")]
    EvenExponentCount(usize),

    #[error("exponent product {product} exceeds the brute-force budget {budget}")]
    BudgetExceeded { product: u128, budget: u64 },

    #[error("census candidate {a:?} has exponent product {product}, over the budget {budget}")]
    CensusBudgetExceeded {
        a: Vec<u64>,
        product: u128,
        budget: u64,
    },

    #[error("|bP_4m| needs m >= 2, got m = {0}")]
    BpOrderDomain(u32),

    #[error("search dimension must be an odd number >= 5, got {0}")]
    BadSearchDimension(u32),

    #[error("prefix {0:?} admits arbitrarily large final exponents; set max_last_entry")]
    UnboundedFamily(Vec<u64>),

    #[error("monomial degree {0} is over the counting limit 2^26")]
    DegreeTooLarge(u64),

    #[error("monomial count at degree {degree} does not fit in 128 bits")]
    MonomialCountOverflow { degree: u64 },

    #[error("Sylvester prefix of length {0} does not fit 64-bit exponents")]
    SylvesterPrefixTooLarge(usize),

    #[error("meet-in-the-middle table needs {entries} partial sums, over the limit 2^27")]
    SignatureTableTooLarge { entries: u128 },

    #[error("signature magnitude does not fit i64")]
    SignatureOverflow,

    #[error("internal error: signature {0} of a recognized sphere is not divisible by 8")]
    SignatureResidue(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
