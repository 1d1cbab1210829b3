pub mod degeneracy;
pub mod gibbs;
pub mod gr_angles;
pub mod spectrum;
pub mod sweep;
pub mod vqa;

use xygibbs::exactsolver::ModelParams;
use xygibbs::Result;

/// Shared model flags; warns on stderr when gamma leaves [0, 1].
pub fn model_params(n_sites: usize, gamma: f64, field_h: f64) -> Result<ModelParams> {
    let params = ModelParams::new(n_sites, gamma, field_h)?;
    if !params.gamma_in_standard_range() {
        eprintln!(
            "warning: gamma = {gamma} lies outside [0, 1]; the solver handles it, \
             but the standard model families live inside"
        );
    }
    Ok(params)
}
