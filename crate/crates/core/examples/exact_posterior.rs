use helios_rsrc::*;
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;

fn exact_mean(op: &fredholm::DiscreteOperator, data: &[f64], nc: &[f64], gamma: f64, d: f64, grid: &grid::GridSpec) -> Vec<f64> {
    let n = op.n_cols;
    let prior = bayes::build_prior(&bayes::PriorSpec::on_grid(gamma, d, grid)).unwrap();
    let c0 = DMatrix::from_fn(n, n, |i, j| prior.covariance(i, j));
    let t = DMatrix::from_row_slice(op.n_rows, n, &op.matrix);
    let sig_inv = DVector::from_iterator(op.n_rows, nc.iter().map(|v| 1.0 / v));
    let mut tst = DMatrix::zeros(n, n);
    for r in 0..op.n_rows {
        let row = t.row(r);
        let w = sig_inv[r];
        for i in 0..n { for j in 0..n { tst[(i, j)] += w * row[i] * row[j]; } }
    }
    let c0_inv = c0.clone().try_inverse().unwrap();
    let prec = c0_inv + tst;
    let mut rhs = DVector::zeros(n);
    for r in 0..op.n_rows {
        let w = sig_inv[r] * data[r];
        for i in 0..n { rhs[i] += w * t[(r, i)]; }
    }
    prec.lu().solve(&rhs).unwrap().data.into()
}

fn main() {
    let cfg = config::ExperimentConfig::preset(config::Preset::Desk);
    let gcfg = cfg.geometry.with_n_per_arc(cfg.inversion.n_per_arc);
    let inv_grid = cfg.inv_grid();
    let g_inv: Vec<f64> = inv_grid.nodes().iter().map(|y| sources::mean_g1(*y)).collect();
    let s_inv: Vec<f64> = inv_grid.nodes().iter().map(|y| sources::variance_sigma1(*y)).collect();

    let mut ops_m = Vec::new(); let mut ops_v = Vec::new();
    let mut data_m: Vec<f64> = Vec::new(); let mut data_v: Vec<f64> = Vec::new();
    let mut se_m: Vec<f64> = Vec::new(); let mut se_v: Vec<f64> = Vec::new();
    for (i, x) in cfg.inversion.wavenumbers_x.iter().enumerate() {
        let k = geometry::Wavenumber::regular(x * PI);
        let geom = geometry::build_geometry(&gcfg, k).unwrap();
        let b = io::read_bundle(std::path::Path::new(&format!("/tmp/desk2/bundles/inv_k{i}_eps0.001.json"))).unwrap();
        let c = forward::ScalingFactors::unit(geom.m);
        let f = phase_retrieval::rhs_expectation(&b, &c, &geom, phase_retrieval::RhsMode::SecondMoment).unwrap();
        data_m.extend(f.iter().map(|p| p[0]));
        se_m.extend(phase_retrieval::data_se_expectation(&b, 0));
        ops_m.push(fredholm::assemble_mean_operator(&geom, &inv_grid, 0).unwrap());
        let ff = phase_retrieval::rhs_variance(&b, &c, &geom).unwrap();
        data_v.extend(ff.iter().map(|p| p[2]));
        se_v.extend(phase_retrieval::data_se_variance(&b, 2));
        ops_v.push(fredholm::assemble_variance_operator(&geom, &inv_grid, 0, 1).unwrap());
    }
    let op_m = fredholm::stack(&ops_m).unwrap();
    let op_v = fredholm::stack(&ops_v).unwrap();
    let nc_m = bayes::noise_cov_from_data(&data_m, &se_m, 0.001);
    let nc_v = bayes::noise_cov_from_data(&data_v, &se_v, 0.001);

    let rms = |v: &[f64]| (v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64).sqrt();
    println!("g: rms data {:.3e}, rms se {:.3e}; sigma: rms data {:.3e}, rms se {:.3e}",
        rms(&data_m), rms(&se_m), rms(&data_v), rms(&se_v));
    for gamma in [0.0003, 0.001, 0.003, 0.01] {
        for d in [0.15, 0.2, 0.3] {
            let mean_g = exact_mean(&op_m, &data_m, &nc_m, gamma, d, &inv_grid);
            println!("g channel gamma={gamma} d={d}: rel err = {:.4}", bayes::rel_l2_error(&mean_g, &g_inv));
        }
    }
    for gamma in [0.003, 0.01, 0.05, 0.2] {
        for d in [0.15, 0.2, 0.3] {
            let mean_s = exact_mean(&op_v, &data_v, &nc_v, gamma, d, &inv_grid);
            println!("sigma channel gamma={gamma} d={d}: rel err = {:.4}", bayes::rel_l2_error(&mean_s, &s_inv));
        }
    }
}
