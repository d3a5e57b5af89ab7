//! Exact factorizations, quotient complements and twisted tensor product
//! decompositions, with certificates that can be re-checked independently.

mod certificate;
mod factorization;
mod obstruction;
mod paths;

pub use certificate::{
    componentwise_r, f_matrix, reassemble, verify_certificate, CertificateParts, SplitCertificate, SplitPath,
};
pub use factorization::{exact_factorization, FactorizationWitness};
pub use obstruction::{obstruction_check, Clause, ObstructionReport, Pairing};
pub use paths::{
    double_projection, double_splitting, extension_split, mueger_quotient, split, split_via_factorizable,
    split_via_fullrank, ExtensionSplit, MuegerQuotient, PathChoice,
};
