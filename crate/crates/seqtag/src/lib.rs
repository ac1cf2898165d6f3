//! Neural sequence tagging with hierarchical bidirectional GRUs and a
//! cost-augmented CRF output layer.
//!
//! The encoder works on two levels: a character-level bidirectional GRU
//! produces a morphology vector per word, which is concatenated with a word
//! embedding and fed to a word-level bidirectional GRU. A linear-chain CRF
//! scores tag sequences on top of the word-level states; training maximizes
//! a softmax-margin objective where competitor sequences are penalized by
//! their Hamming distance to the gold tags. All gradients are computed
//! analytically (no autodiff tape) and optimized with mini-batch AdaGrad.
//!
//! Several tasks can be trained jointly by sharing parameter tensors:
//! multi-task sharing keeps everything below the per-task CRF heads in
//! common, cross-lingual sharing keeps only the character level in common.

pub mod checkpoint;
pub mod config;
pub mod crf;
pub mod data;
pub mod embeddings;
pub mod error;
pub mod eval;
pub mod gazetteer;
pub mod gru;
pub mod model;
pub mod params;
pub mod tensor;
pub mod train;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
