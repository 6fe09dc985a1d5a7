//! The Exchange Theorem, decompositions of maps on `A ⊕ A^sop` and `Q(n)`,
//! identity-component analysis, commuting roots and the fine-grading
//! obstruction.

pub mod centers;
pub mod decompose;
pub mod exchange;
pub mod identity;
pub mod lemmas;
pub mod obstruction;
pub mod roots;

pub use decompose::{decompose_pair_map, decompose_q_map, PairMapDecomposition, QMapDecomposition};
pub use exchange::{exchange_decompose, ExchangeResult};
pub use identity::{identity_decomposition, BlockKind, DecompositionBlock, IdentityDecomposition};
pub use obstruction::{fine_antiauto_obstruction, ObstructionReport};
pub use roots::{find_commuting_root, RootMode, RootResult};
