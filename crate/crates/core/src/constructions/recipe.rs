use serde::Serialize;

use crate::error::Result;
use crate::graph::{Dart, PolarizedGraph};
use crate::ops::{add_parallel_edge, blow_up_elementary, double_edge, subdivide};

/// One surgery in a frozen construction, addressed by ids of the graph it
/// is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    BlowUp { vertex: usize, start: usize, len: usize },
    Double { dart: Dart },
    Subdivide { edge: usize },
    /// Parallel edge along the walk segment of `len` darts starting at `first`.
    Parallel { first: Dart, len: usize },
}

impl Step {
    pub fn apply(&self, g: &PolarizedGraph) -> Result<PolarizedGraph> {
        let out = match *self {
            Step::BlowUp { vertex, start, len } => blow_up_elementary(g, vertex, start, len)?,
            Step::Double { dart } => double_edge(g, dart)?,
            Step::Subdivide { edge } => subdivide(g, edge)?,
            Step::Parallel { first, len } => {
                g.check_dart(first)?;
                let mut chain = vec![first];
                while chain.len() < len {
                    chain.push(g.tau(*chain.last().expect("nonempty")));
                }
                add_parallel_edge(g, &chain)?
            }
        };
        Ok(out.graph)
    }
}

pub fn apply_recipe(base: &PolarizedGraph, steps: &[Step]) -> Result<PolarizedGraph> {
    steps.iter().try_fold(base.clone(), |g, step| step.apply(&g))
}
