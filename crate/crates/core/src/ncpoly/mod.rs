//! Noncommutative polynomials over the rationals and the free Hopf
//! structure maps induced by generator roles.

mod alphabet;
mod poly;
mod structure;
mod tensor;
mod word;

pub use alphabet::{Alphabet, Letter, LetterInfo, Role};
pub use poly::NCPolynomial;
pub use structure::{
    antipode_apply, coproduct_left, coproduct_right, counit_eval, counit_left, counit_right, free_coproduct,
    word_antipode, word_coproduct, word_counit,
};
pub use tensor::{Tensor, Tensor3, TensorElement};
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("no image given for letter #{}", .0.0)]
    MissingImage(Letter),
    #[error("letter #{} has no Hopf role", .0.0)]
    MissingRole(Letter),
    #[error("letter #{} has no inverse letter", .0.0)]
    MissingInverse(Letter),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("letter `{0}` declared twice")]
    DuplicateLetter(String),
    #[error("skew-primitive `{0}` has a tag that is not a group word")]
    NonGroupTag(String),
}
