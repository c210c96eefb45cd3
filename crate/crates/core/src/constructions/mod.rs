//! Explicit graph families: polygon quotients, monographs, homotopic optima,
//! the genus 1 to 5 optima, Skolem triples and the complete-graph synthesis,
//! and the recursive connected-sum family.

mod family;
mod ks;
mod monograph;
mod optimal;
mod polygon;
mod recipe;
mod skolem;

pub use family::{
    asymptotic_family, build_recipe, family_recipe, family_set, fit_constants, is_prime, FamilyRecipe, BASE_GENUS,
};
pub use ks::{ks_polarization, ks_polygon, steiner_from_walks, KsAudit, SteinerSystem, S9_SEQUENCE};
pub use monograph::{homotopic_optimal, lower_bound_graph, standard_monograph, word_monograph};
pub use optimal::{genus_optimal, search_genus1, search_genus2, search_genus3, FROZEN_G1, FROZEN_G2, FROZEN_G3};
pub use polygon::{gluing_quotient, GluingPolygon, Quotient};
pub use recipe::{apply_recipe, Step};
pub use skolem::{skolem_triples, SkolemTriples};
