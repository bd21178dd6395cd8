//! Fixed instances shared by the benchmarks.

use nsg_core::ProblemInstance;

/// `((1,2), (4,1), {5})`, whose variety is finite.
pub fn lottery(g: u64) -> ProblemInstance {
    ProblemInstance::new(vec![1, 2], vec![4, 1], vec![5], g, 0).unwrap()
}

/// `((2,3), (4,2), {6,8})`, whose variety is infinite.
pub fn even_offsets(g: u64, r: u64) -> ProblemInstance {
    ProblemInstance::new(vec![2, 3], vec![4, 2], vec![6, 8], g, r).unwrap()
}

/// No constraints: every numerical semigroup of genus `g`.
pub fn unconstrained(g: u64) -> ProblemInstance {
    ProblemInstance::new(vec![], vec![], vec![], g, 0).unwrap()
}
