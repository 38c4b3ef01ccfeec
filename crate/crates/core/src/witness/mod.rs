//! Coefficient tables for the `p(49n + r)` witness identities, checks of the
//! identities as series, and re-derivation of the tables.

pub mod derive;
pub mod identity;
pub mod tables;

pub use derive::{
    derive_component, extract_columns, progression_slot, published_cf13, regenerate_tables,
    regenerate_with_order, table_columns, table_diff, Bookkeeping, DerivationResult, Pipeline,
    Regeneration, PUBLISHED_CF13, WORKING_ORDER,
};
pub use identity::{
    cube_support, progression_parts, rhs_series, theorem_lhs, verify_assembly, verify_theorem,
    verify_witness_7n5, AssemblyReport, TheoremReport, Witness7n5Report,
};
pub use tables::{
    default_tables, inner_residue, load_tables, outer_residue, schedule, Column, Erratum, Schedule,
    TableSet, WitnessTable, RESIDUES,
};
