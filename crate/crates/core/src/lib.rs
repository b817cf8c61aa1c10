//! Sharp upper bounds on the independence number and on the number of
//! independent sets of a fixed size among graphs with `n` vertices and `m`
//! edges, computed from lex graphs with exact integer arithmetic, together
//! with a brute-force verifier that certifies sharpness on small orders.

pub mod arith;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod lexgraph;
pub mod sds;
pub mod verify;

pub use arith::Count;
pub use bounds::{BoundReport, IrBound, SRelation};
pub use enumerate::IndependenceProfile;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use sds::{ErdosDecomposition, SdsDecomposition};
pub use verify::{CellOutcome, CertificateKind, RangeSummary, SharpnessCertificate, VerifyConfig};
