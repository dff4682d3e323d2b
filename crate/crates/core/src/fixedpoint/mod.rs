//! Root data, subsystems from the affine diagram, the class function `Π`,
//! the count polynomial for pairs `(g, B)` and its brute-force oracle.

pub mod bruteforce;
pub mod fixtures;
pub mod pipeline;
pub mod roots;
pub mod subsystem;

pub use bruteforce::{brute_force_count, brute_force_counts, BruteForceReport, SmallGroup};
pub use fixtures::{check_table_fixture, FixtureReport};
pub use pipeline::{builtin_type_a, pipeline_count, FixedPointReport, PipelineData, Provenance};
pub use roots::{root_data, RootSystemData, SimpleType};
pub use subsystem::{
    full_group_order, full_subsystem, group_order, inner_with_pi, pi_class_function, pi_cross_check, subsystem,
    subsystems, ClassFunctionQ, SubsystemData,
};
