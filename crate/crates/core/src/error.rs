use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },

    #[error("bad token {token:?} at position {position}")]
    BadToken { position: usize, token: String },

    #[error("missing '|' between prefix and period")]
    MissingSeparator,

    #[error("the period of an ultimately periodic word must be nonempty")]
    EmptyPeriod,

    /// Reported by the code scanner; `position` is 1-based.
    #[error("malformed code at position {position}")]
    MalformedCode { position: usize },

    #[error("eraser index {index} exceeds the stage count {stages}")]
    IndexOutOfRange { index: u32, stages: u32 },

    #[error("expected a word over {{0, 1}}")]
    NotBinary,
}
