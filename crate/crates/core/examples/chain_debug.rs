use helios_rsrc::*;
use std::f64::consts::PI;

fn main() {
    let cfg = config::ExperimentConfig::preset(config::Preset::Desk);
    let gcfg = cfg.geometry.with_n_per_arc(cfg.inversion.n_per_arc);
    let inv_grid = cfg.inv_grid();
    // data straight from the bundle files used by the failing run
    let mut ops = Vec::new();
    let mut data: Vec<f64> = Vec::new();
    for (i, x) in cfg.inversion.wavenumbers_x.iter().enumerate() {
        let k = geometry::Wavenumber::regular(x * PI);
        let geom = geometry::build_geometry(&gcfg, k).unwrap();
        let b = io::read_bundle(std::path::Path::new(&format!("/tmp/desk/bundles/inv_k{i}_eps0.001.json"))).unwrap();
        let c = forward::ScalingFactors::unit(geom.m);
        let f = phase_retrieval::rhs_expectation(&b, &c, &geom, phase_retrieval::RhsMode::SecondMoment).unwrap();
        data.extend(f.iter().map(|p| p[0]));
        ops.push(fredholm::assemble_mean_operator(&geom, &inv_grid, 0).unwrap());
    }
    let op = fredholm::stack(&ops).unwrap();
    let nan = data.iter().filter(|d| !d.is_finite()).count();
    let rms = (data.iter().map(|d| d * d).sum::<f64>() / data.len() as f64).sqrt();
    println!("data: n = {}, non-finite = {nan}, rms = {rms:.3e}", data.len());
    let nc = bayes::noise_cov_from_data(&data, 0.001);
    let psi0 = bayes::potential(&vec![0.0; inv_grid.n_nodes()], &op, &data, &nc).unwrap();
    println!("Psi(0) = {psi0:.4e}");
    // residual of the best possible fit: T(g1_inv)
    let g_inv: Vec<f64> = inv_grid.nodes().iter().map(|y| sources::mean_g1(*y)).collect();
    let psi_truth = bayes::potential(&g_inv, &op, &data, &nc).unwrap();
    println!("Psi(g1 on inv grid) = {psi_truth:.4e}");
    // a few pCN proposals from zero
    let prior = bayes::build_prior(&bayes::PriorSpec::on_grid(0.001, 0.2, &inv_grid)).unwrap();
    let mut rng = rng::stream_rng(1, rng::DOMAIN_TEST, 0, 0);
    let mut down = 0;
    for _ in 0..200 {
        let xi = bayes::sample_prior(&prior, &mut rng);
        let prop: Vec<f64> = xi.iter().map(|x| 0.05 * x).collect();
        let psi = bayes::potential(&prop, &op, &data, &nc).unwrap();
        if psi < psi0 { down += 1; }
    }
    println!("downhill proposals from zero: {down}/200");
}
