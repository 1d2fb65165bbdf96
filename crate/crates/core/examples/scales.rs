use helios_rsrc::*;
use std::f64::consts::PI;

fn main() {
    let cfg = config::ExperimentConfig::preset(config::Preset::Desk);
    let gcfg = cfg.geometry.with_n_per_arc(cfg.inversion.n_per_arc);
    let k = geometry::Wavenumber::regular(82.5 * PI);
    let geom = geometry::build_geometry(&gcfg, k).unwrap();
    let sim_grid = cfg.sim_grid();
    let inv_grid = cfg.inv_grid();
    let g = grid::SourceField::from_fn(sim_grid, grid::FieldRole::G, sources::mean_g1).unwrap();
    let sq = grid::SourceField::from_fn(sim_grid, grid::FieldRole::SigmaSq, sources::variance_sigma1).unwrap();
    let c = forward::ScalingFactors::unit(geom.m);
    let bundle = closed_loop::bundle_from_sources(&g, &sq, &geom, &c).unwrap();
    let f = phase_retrieval::rhs_expectation(&bundle, &c, &geom, phase_retrieval::RhsMode::SecondMoment).unwrap();
    let big_f = phase_retrieval::rhs_variance(&bundle, &c, &geom).unwrap();
    let f0: Vec<f64> = f.iter().map(|p| p[0]).collect();
    let f12: Vec<f64> = big_f.iter().map(|p| p[2]).collect();
    let rms = |v: &[f64]| (v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64).sqrt();
    println!("closed-loop data scales at k=82.5pi: rms f_1 = {:.3e}, rms F_12 = {:.3e}", rms(&f0), rms(&f12));

    // operator applied to truth on inv grid vs the data (model consistency)
    let op_m = fredholm::assemble_mean_operator(&geom, &inv_grid, 0).unwrap();
    let op_v = fredholm::assemble_variance_operator(&geom, &inv_grid, 0, 1).unwrap();
    let g_inv: Vec<f64> = inv_grid.nodes().iter().map(|y| sources::mean_g1(*y)).collect();
    let s_inv: Vec<f64> = inv_grid.nodes().iter().map(|y| sources::variance_sigma1(*y)).collect();
    let tm = fredholm::apply(&op_m, &g_inv).unwrap();
    let tv = fredholm::apply(&op_v, &s_inv).unwrap();
    let resid_m: Vec<f64> = tm.iter().zip(&f0).map(|(a, b)| a - b).collect();
    let resid_v: Vec<f64> = tv.iter().zip(&f12).map(|(a, b)| a - b).collect();
    println!("mean channel:  rms T_inv(g1) = {:.3e}, rms residual = {:.3e} ({:.1}% of data)", rms(&tm), rms(&resid_m), 100.0 * rms(&resid_m) / rms(&f0));
    println!("var  channel:  rms T_inv(s1) = {:.3e}, rms residual = {:.3e} ({:.1}% of data)", rms(&tv), rms(&resid_v), 100.0 * rms(&resid_v) / rms(&f12));

    // same on the sim grid (inverse-crime route, sanity)
    let op_m_sim = fredholm::assemble_mean_operator(&geom, &sim_grid, 0).unwrap();
    let g_sim: Vec<f64> = sim_grid.nodes().iter().map(|y| sources::mean_g1(*y)).collect();
    let tm_sim = fredholm::apply(&op_m_sim, &g_sim).unwrap();
    let resid_sim: Vec<f64> = tm_sim.iter().zip(&f0).map(|(a, b)| a - b).collect();
    println!("mean channel on sim grid: rms residual = {:.3e} ({:.2}% of data)", rms(&resid_sim), 100.0 * rms(&resid_sim) / rms(&f0));
}
