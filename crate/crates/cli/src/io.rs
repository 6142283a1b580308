use std::path::Path;

use braidcore::ColoredBraidWord;
use laurent::{Torus, C64};
use signature::SeifertSystem;

use crate::error::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn read_braid(path: &Path) -> Result<ColoredBraidWord, CliError> {
    Ok(read(path)?.parse()?)
}

pub fn read_seifert(path: &Path) -> Result<SeifertSystem, CliError> {
    Ok(serde_json::from_str(&read(path)?)?)
}

/// `ω_k = e^{iθ_k}`.
pub fn torus_from_arguments(theta: &[f64]) -> Result<Torus, CliError> {
    let omegas: Vec<C64> = theta.iter().map(|t| C64::from_polar(1.0, *t)).collect();
    Ok(Torus::from_omegas(&omegas)?)
}

/// `a_1,a_2,…` as a list of floats.
pub fn parse_point(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| CliError::Input(format!("bad number {x:?} in {s:?}"))))
        .collect()
}

pub fn check_arity(b: &ColoredBraidWord, values: &[f64], what: &str) -> Result<(), CliError> {
    if values.len() != b.mu() {
        return Err(CliError::Input(format!("{} {what} given for {} colors", values.len(), b.mu())));
    }
    Ok(())
}
