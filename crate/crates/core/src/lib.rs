//! Minimum-degree thresholds for Hamiltonian cycles in k-partite graphs.
//!
//! The crate covers the whole verification loop at desk scale:
//!
//! * [`partition`] evaluates the threshold function `Φ` and its ingredients
//!   (`λ`, `μ`, `f`, `g`, `h₁`, `h₂`) for a partition of `n`, both with the
//!   exact floor/ceiling formulas and in the asymptotic (rational) form.
//! * [`graph`] holds the bitset-backed [`PartiteGraph`] and the degree,
//!   neighbourhood and cut primitives.
//! * [`constructions`] builds the four families of non-Hamiltonian graphs that
//!   sit one below the threshold, together with checkable certificates.
//! * [`matching`] audits weak expansion and produces perfect fractional
//!   matchings (edge / odd-cycle covers).
//! * [`expansion`] implements robust neighbourhoods, the robust-expander test,
//!   the two sufficient audits, `ν`-extremal detection and the classifier.
//! * [`hamiltonicity`] is the exact oracle (subset DP / budgeted backtracking),
//!   the bipartite degree-sequence test and the extremal-case cycle builder.
//! * [`sweep`] tabulates the tightness constructions across partitions.

pub mod constructions;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod hamiltonicity;
pub mod matching;
pub mod partition;
pub mod rational;
pub mod sweep;

pub use constructions::{
    build_tightness, build_tightness_with_case, select_case, verify_certificate, CertificateKind,
    ConstructionResult, NamedSets, NonHamiltonicityCertificate, TightnessCase,
};
pub use error::{Error, Result};
pub use expansion::{
    classify, is_robust_expander, near_independent_expansion_audit, nu_extremal_witness,
    robust_degree_bound_check, robust_neighborhood, sparse_cut_audit, AuditOutcome,
    ClassificationVerdict, ClassifyOptions, ExpanderParams, ExtremalSearch, Hypothesis, Outcome,
    RobustReport, RobustVerdict, SearchMode,
};
pub use graph::{DegreeReport, PartiteGraph, VertexSet, MAX_VERTICES};
pub use hamiltonicity::{
    berge_biconnected_check, bipartite_hamiltonian_path, extremal_construct_cycle,
    find_hamiltonian_cycle, verify_cycle, ExtremalCycle, HamiltonOutcome, HamiltonVerdict,
    PathOutcome, SolveMethod, StitchState, StitchStep,
};
pub use matching::{
    maximum_bipartite_matching, perfect_fractional_matching, weak_expansion_audit,
    ExpansionViolation, FractionalMatching,
};
pub use partition::{enumerate_partitions, Partition, PartitionProfile, ProfileMode};
pub use sweep::{sweep, sweep_row, Hamiltonian, SweepOptions, SweepRow};

/// Exact rational scalar used for every fractional threshold.
pub type Rational = num_rational::Ratio<i64>;

/// Profile evaluated with the floor/ceiling formulas; all values are integers.
pub type ExactProfile = PartitionProfile<i64>;

/// Profile evaluated with floors and ceilings dropped; values may be halves.
pub type AsymptoticProfile = PartitionProfile<Rational>;
