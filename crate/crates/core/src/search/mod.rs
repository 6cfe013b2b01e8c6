//! Exhaustive enumeration, cospectral-mate searches and case generators.

mod attach;
mod enumerate;
mod forbidden;
mod mates;

pub use attach::{edge_completion_cases, pendant_cases, triangle_attachment_cases, CASE_LIMIT};
pub use enumerate::{
    count_graphs, enumerate_graphs, enumerate_graphs_with, fold_graphs, EnumFilter, EnumOptions,
    ENUM_LIMIT,
};
pub use forbidden::{classify_forbidden, ForbiddenVerdict, Verdict};
pub use mates::{
    certify_ds, certify_ds_with, cospectral_mates, cospectral_mates_with, PrefilterAudit,
    SearchOptions, SearchReport,
};
