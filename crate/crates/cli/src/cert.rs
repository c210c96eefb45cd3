use std::collections::BTreeMap;

use polwalk::bounds::{audit, BoundReport, Outcome};
use polwalk::{fmt_q, format, trace_walks, PolarizedGraph};
use serde::{Deserialize, Serialize};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub s: usize,
    pub a: usize,
    pub a_r: usize,
    pub f: usize,
    pub chi: i64,
    pub gamma: i64,
    pub v: String,
    pub v_r: String,
    /// Walk length to number of walks of that length.
    pub ell: BTreeMap<usize, usize>,
    pub parity: usize,
    pub ordinary: bool,
    pub condition_c: bool,
    pub complete_walk: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub polgraph: Vec<String>,
    pub stats: StatsDoc,
    pub walk_lengths: Vec<usize>,
    /// Vertices visited by the complete walk, closing vertex included.
    pub itinerary: Option<Vec<usize>>,
    pub audit: BTreeMap<String, String>,
    /// The `construct` arguments that produced the graph, plus any recipe tree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<serde_json::Value>,
}

fn outcome(o: &Outcome) -> String {
    match o {
        Outcome::Holds(s) => format!("holds (slack {})", fmt_q(s)),
        Outcome::Violated(s) => format!("violated (slack {})", fmt_q(s)),
        Outcome::NotApplicable => "not applicable".into(),
    }
}

pub fn audit_doc(r: &BoundReport) -> BTreeMap<String, String> {
    [
        ("spade", &r.spade),
        ("heart", &r.heart),
        ("diamond", &r.diamond),
        ("club_r", &r.club_r),
        ("diamond_r", &r.diamond_r),
    ]
    .into_iter()
    .map(|(k, o)| (k.to_string(), outcome(o)))
    .collect()
}

pub fn certify(g: &PolarizedGraph, recipe: Option<serde_json::Value>) -> polwalk::Result<Certificate> {
    let w = trace_walks(g)?;
    let st = polwalk::stats(g, &w);
    Ok(Certificate {
        version: VERSION,
        polgraph: format::serialize(g).lines().map(str::to_string).collect(),
        stats: StatsDoc {
            s: st.s,
            a: st.a,
            a_r: st.a_r,
            f: st.f,
            chi: st.chi,
            gamma: st.gamma,
            v: fmt_q(&st.v),
            v_r: fmt_q(&st.v_r),
            ell: st.ell.clone(),
            parity: st.parity,
            ordinary: st.is_ordinary,
            condition_c: st.satisfies_c,
            complete_walk: st.has_complete_walk,
        },
        walk_lengths: w.lengths(),
        itinerary: w.complete().map(|mc| mc.itinerary(g)),
        audit: audit_doc(&audit(&st)),
        recipe,
    })
}

impl Certificate {
    pub fn graph(&self) -> polwalk::Result<PolarizedGraph> {
        format::parse(&self.polgraph.join("\n"))
    }

    /// Names of fields that differ from a fresh computation on the embedded
    /// graph. The recipe is checked by the caller.
    pub fn mismatches(&self) -> polwalk::Result<Vec<&'static str>> {
        let fresh = certify(&self.graph()?, None)?;
        let mut out = Vec::new();
        if self.version != VERSION {
            out.push("version");
        }
        if self.polgraph != fresh.polgraph {
            out.push("polgraph");
        }
        if self.stats != fresh.stats {
            out.push("stats");
        }
        if self.walk_lengths != fresh.walk_lengths {
            out.push("walk_lengths");
        }
        if self.itinerary != fresh.itinerary {
            out.push("itinerary");
        }
        if self.audit != fresh.audit {
            out.push("audit");
        }
        Ok(out)
    }
}
