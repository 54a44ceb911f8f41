//! CIS decisions and the GCI permutations induced by CIS codes.

mod gci;
mod partition;

pub use gci::{
    extract_permutation, fwht, gci_order_dual, gci_order_dual_linear, gci_order_walsh, walsh, walsh_row,
    GciReport, PermutationTable, MAX_TABLE_VARIABLES,
};
pub use partition::{
    find_cis_partition, find_cis_partition_exact, is_cis_systematic, is_information_set, quick_reject,
    CisCertificate, CisDecision, NotCisReason, QuickVerdict, RANDOM_PREPASS_TRIALS,
};
