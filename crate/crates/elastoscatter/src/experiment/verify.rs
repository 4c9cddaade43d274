//! Numerical verification checks behind `elastoscatter verify <suite>`.
//!
//! Each function returns plain [`Check`] rows so the CLI suites and the
//! acceptance tests can share the exact same measurements.

use nalgebra::Vector3;
use num_complex::Complex64;
use rand::prelude::*;
use rand::rngs::StdRng;

use crate::config::ExperimentConfig;
use crate::elasto::{
    column_vec, complexify, kupradze_tensor, navier_residual_fd, plane_full_wave, plane_p_wave,
    plane_s_wave, traction, traction_curl_form, CMat3, CVec3, Material, PlaneWave, RVec3, WaveKind,
};
use crate::farfield::{
    farfield_boundary_integral, farfield_from_sources, fit_hankel_modes, green_asymptotics_check,
    rellich_modes, sphere_mode_coefficients, split_pattern,
};
use crate::geometry::{build_mesh, ObstacleShape};
use crate::potential::{betti_representation, jump_estimate, single_layer, SurfaceDensity};
use crate::report::{Check, SuiteReport};
use crate::solver::{helmholtz_split, BoundaryCondition, CollocationOperator, IncidentField};
use crate::special::{sph_hankel1, sph_hankel2, SphereQuadrature};
use crate::{Error, Result};

use super::fit_slope;

/// A reusable default solve: the configured obstacle with the configured
/// incident field, plus the factorized operator it came from.
pub struct SolverContext {
    pub op: CollocationOperator,
    pub sol: crate::solver::ScatteringSolution,
    pub config: ExperimentConfig,
}

/// Build the shared context from a config (first obstacle).
pub fn solver_context(cfg: &ExperimentConfig) -> Result<SolverContext> {
    cfg.validate()?;
    let obs = &cfg.obstacles[0];
    let op = CollocationOperator::new(&obs.shape, obs.bc, &cfg.material, &cfg.solver)?;
    let sol = op.solve(cfg.incident_field()?)?;
    Ok(SolverContext {
        op,
        sol,
        config: cfg.clone(),
    })
}

fn rand_unit(rng: &mut StdRng) -> RVec3 {
    loop {
        let v = Vector3::new(
            rng.random::<f64>() * 2.0 - 1.0,
            rng.random::<f64>() * 2.0 - 1.0,
            rng.random::<f64>() * 2.0 - 1.0,
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}

fn rand_point(rng: &mut StdRng, scale: f64) -> RVec3 {
    Vector3::new(
        (rng.random::<f64>() - 0.5) * scale,
        (rng.random::<f64>() - 0.5) * scale,
        (rng.random::<f64>() - 0.5) * scale,
    )
}

fn rand_cmat(rng: &mut StdRng) -> CMat3 {
    CMat3::from_fn(|_, _| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
}

// ---------------------------------------------------------------------------
// kernel checks (acceptance criteria 1-3)
// ---------------------------------------------------------------------------

/// Fundamental-tensor symmetry, argument swap and PDE residual order.
pub fn kernel_checks(mat: &Material) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(101);
    let mut sym_worst = 0.0f64;
    let mut swap_worst = 0.0f64;
    for _ in 0..100 {
        let x = rand_point(&mut rng, 4.0);
        let mut y = rand_point(&mut rng, 4.0);
        if (x - y).norm() < 1e-2 {
            y += Vector3::new(1.0, 0.0, 0.0);
        }
        let u = kupradze_tensor(&x, &y, mat)?;
        let swapped = kupradze_tensor(&y, &x, mat)?;
        sym_worst = sym_worst.max((u - u.transpose()).norm() / u.norm());
        swap_worst = swap_worst.max((u - swapped).norm() / u.norm());
    }

    let y = Vector3::zeros();
    let mut order_dev = 0.0f64;
    for j in 0..3 {
        let field = |p: &RVec3| column_vec(&kupradze_tensor(p, &y, mat).unwrap(), j);
        let x = Vector3::new(0.31, 0.2, -0.27);
        let r1 = navier_residual_fd(&field, &x, mat, 2e-3).norm();
        let r2 = navier_residual_fd(&field, &x, mat, 1e-3).norm();
        order_dev = order_dev.max(((r1 / r2).log2() - 2.0).abs());
    }

    Ok(vec![
        Check::max("kupradze matrix symmetry (100 pairs)", sym_worst, 1e-13),
        Check::max("kupradze argument swap (100 pairs)", swap_worst, 1e-13),
        Check::max(
            "kupradze column navier residual richardson order deviation from 2",
            order_dev,
            0.2,
        ),
    ])
}

/// Agreement of the stress form and the curl form of the traction.
pub fn traction_checks(mat: &Material) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(202);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let j = rand_cmat(&mut rng);
        let nu = rand_unit(&mut rng);
        let a = traction(mat, &nu, &j);
        let b = traction_curl_form(mat, &nu, &j);
        worst = worst.max((a - b).norm() / a.norm().max(1e-300));
    }
    vec![Check::max(
        "traction forms agree (100 random jacobians)",
        worst,
        1e-13,
    )]
}

/// Plane-wave structure: polarization geometry, degenerate cases and the
/// Navier residual of the full wave.
pub fn plane_wave_checks(mat: &Material) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(303);
    let mut parallel_worst = 0.0f64;
    let mut orthogonal_worst = 0.0f64;
    let mut residual_worst = 0.0f64;
    for _ in 0..20 {
        let alpha = rand_unit(&mut rng);
        let eta = rand_point(&mut rng, 2.0);
        let x = rand_point(&mut rng, 2.0);
        let wave = PlaneWave::new(alpha, eta, WaveKind::Full).unwrap();
        let p = plane_p_wave(&x, &wave, mat);
        let s = plane_s_wave(&x, &wave, mat);
        if p.norm() > 0.0 {
            parallel_worst =
                parallel_worst.max(complexify(&alpha).cross(&p).norm() / p.norm());
        }
        if s.norm() > 0.0 {
            orthogonal_worst = orthogonal_worst.max(complexify(&alpha).dot(&s).norm() / s.norm());
        }
        let field = |q: &RVec3| plane_full_wave(q, &wave, mat);
        let u = field(&x);
        if u.norm() > 0.0 {
            residual_worst =
                residual_worst.max(navier_residual_fd(&field, &x, mat, 5e-4).norm() / u.norm());
        }
    }

    // degenerate cases: orthogonal eta kills the pressure part, aligned eta
    // the shear part, exactly
    let alpha = Vector3::new(0.0, 0.0, 1.0);
    let w_orth = PlaneWave::new(alpha, Vector3::new(1.0, 0.0, 0.0), WaveKind::Full).unwrap();
    let w_align = PlaneWave::new(alpha, alpha, WaveKind::Full).unwrap();
    let x = Vector3::new(0.3, -0.8, 0.2);
    let degenerate = plane_p_wave(&x, &w_orth, mat)
        .norm()
        .max(plane_s_wave(&x, &w_align, mat).norm());

    vec![
        Check::max("pressure part parallel to direction", parallel_worst, 1e-14),
        Check::max("shear part orthogonal to direction", orthogonal_worst, 1e-14),
        Check::max(
            "full plane wave navier residual (relative)",
            residual_worst,
            1e-6,
        ),
        Check::max("degenerate polarizations vanish exactly", degenerate, 0.0),
    ]
}

// ---------------------------------------------------------------------------
// potential checks (acceptance criterion 4 and friends)
// ---------------------------------------------------------------------------

/// Two-sided traction jump vs the density, coarse and refined.
pub fn jump_checks(mat: &Material) -> Result<Vec<Check>> {
    let shape = ObstacleShape::Sphere {
        radius: 1.0,
        center: [0.0; 3],
    };
    let offsets = [0.3, 0.2, 0.1];
    let rel_err = |n_theta: usize, n_phi: usize| -> Result<f64> {
        let mesh = build_mesh(&shape, n_theta, n_phi)?;
        let density = SurfaceDensity::from_fn(&mesh, |_, nu| complexify(nu));
        let mut worst = 0.0f64;
        // spread probe nodes over the sphere
        let count = mesh.len();
        for &node in &[0, count / 3, count / 2, 2 * count / 3] {
            let jump = jump_estimate(&mesh, &density, node, &offsets, mat)?;
            let want = density.values()[node];
            worst = worst.max((jump - want).norm() / want.norm());
        }
        Ok(worst)
    };
    let coarse = rel_err(32, 64)?;
    let fine = rel_err(48, 96)?;
    Ok(vec![
        Check::max("jump relation relative error at 32x64", coarse, 5e-2),
        Check::min("jump relation improvement factor at 48x96", coarse / fine, 2.0),
    ])
}

/// Representation dichotomy for an entire solution and the Betti identity.
pub fn betti_entire_checks(mat: &Material) -> Result<Vec<Check>> {
    let shape = ObstacleShape::Sphere {
        radius: 1.5,
        center: [0.0; 3],
    };
    let mesh = build_mesh(&shape, 28, 56)?;
    let wave = PlaneWave::new(
        Vector3::new(0.0, 0.0, 1.0),
        Vector3::new(1.0, 0.0, 1.0),
        WaveKind::Full,
    )?;
    let trace_u = SurfaceDensity::from_fn(&mesh, |p, _| plane_full_wave(p, &wave, mat));
    let trace_tu = SurfaceDensity::from_fn(&mesh, |p, nu| {
        traction(mat, nu, &crate::elasto::plane_wave_jacobian(p, &wave, mat))
    });
    let x_out = Vector3::new(0.3, -0.6, 2.6);
    let outside = betti_representation(&mesh, &trace_u, &trace_tu, &x_out, mat)?;
    let scale_out = plane_full_wave(&x_out, &wave, mat).norm();

    let x_in = Vector3::new(0.2, 0.4, -0.3);
    let inside = betti_representation(&mesh, &trace_u, &trace_tu, &x_in, mat)?;
    let want_in = -plane_full_wave(&x_in, &wave, mat);

    let mut betti = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    let w2 = PlaneWave::new(
        Vector3::new(1.0, 2.0, 2.0).normalize(),
        Vector3::new(0.0, 1.0, -1.0),
        WaveKind::Full,
    )?;
    for j in 0..mesh.len() {
        let p = &mesh.nodes[j];
        let nu = &mesh.normals[j];
        let u = plane_full_wave(p, &wave, mat);
        let v = plane_full_wave(p, &w2, mat);
        let tu = traction(mat, nu, &crate::elasto::plane_wave_jacobian(p, &wave, mat));
        let tv = traction(mat, nu, &crate::elasto::plane_wave_jacobian(p, &w2, mat));
        betti += (u.dot(&tv) - v.dot(&tu)) * mesh.weights[j];
        scale = scale.max(u.norm() * tv.norm());
    }

    Ok(vec![
        Check::max(
            "entire-solution representation vanishes outside",
            outside.norm() / scale_out,
            1e-3,
        ),
        Check::max(
            "entire-solution representation reproduces -u inside",
            (inside - want_in).norm() / want_in.norm(),
            1e-6,
        ),
        Check::max(
            "betti identity for two plane waves",
            betti.norm() / (scale * mesh.area()),
            1e-8,
        ),
    ])
}

/// Radiating decay and off-surface PDE residual of the single layer.
pub fn single_layer_checks(mat: &Material) -> Result<Vec<Check>> {
    let shape = ObstacleShape::Sphere {
        radius: 1.0,
        center: [0.0; 3],
    };
    let mesh = build_mesh(&shape, 16, 32)?;
    let density = SurfaceDensity::from_fn(&mesh, |p, nu| {
        complexify(nu) + complexify(p) * Complex64::new(0.0, 0.5)
    });
    let dir = Vector3::new(0.3, -0.5, 0.81).normalize();
    let radii = [10.0, 20.0, 40.0, 80.0, 100.0];
    let mags: Vec<f64> = radii
        .iter()
        .map(|&r| {
            single_layer(&mesh, &density, &(dir * r), mat)
                .map(|v| v.norm().ln())
        })
        .collect::<Result<_>>()?;
    let slope = fit_slope(&radii.map(f64::ln), &mags);

    let x = Vector3::new(0.9, 0.9, 0.9);
    let field = |p: &RVec3| crate::potential::single_layer_raw(&mesh, &density, p, mat).unwrap();
    let residual = navier_residual_fd(&field, &x, mat, 1e-3).norm() / field(&x).norm();

    Ok(vec![
        Check::max("single layer decay slope deviation from -1", (slope + 1.0).abs(), 0.05),
        Check::max("single layer navier residual off-surface", residual, 1e-5),
    ])
}

// ---------------------------------------------------------------------------
// solver checks (acceptance criteria 5, 6, 9 and solver properties)
// ---------------------------------------------------------------------------

/// Held-out residuals for the three boundary conditions on the configured
/// obstacle.
pub fn solver_residual_checks(cfg: &ExperimentConfig) -> Result<Vec<Check>> {
    let shape = &cfg.obstacles[0].shape;
    let incident = cfg.incident_field()?;
    let mut checks = Vec::new();
    for (bc, tol, name) in [
        (BoundaryCondition::Dirichlet, 1e-6, "dirichlet"),
        (BoundaryCondition::Neumann, 1e-4, "neumann"),
        (
            BoundaryCondition::robin(Complex64::new(0.0, 1.0))?,
            1e-4,
            "robin(h=i)",
        ),
    ] {
        let op = CollocationOperator::new(shape, bc, &cfg.material, &cfg.solver)?;
        let sol = op.solve(incident.clone())?;
        checks.push(Check::max(
            format!("held-out {name} residual (relative)"),
            sol.residual_report.relative,
            tol,
        ));
    }
    Ok(checks)
}

/// Zero data, superposition, radiating decay, the radiation condition and the
/// non-vanishing sphere integral of the scattered energy.
pub fn solver_property_checks(ctx: &SolverContext) -> Result<Vec<Check>> {
    let mat = &ctx.sol.material;
    let mut checks = Vec::new();

    // zero incident -> zero coefficients
    let zero = ctx.op.solve(IncidentField::plane(PlaneWave::new(
        Vector3::new(0.0, 0.0, 1.0),
        Vector3::zeros(),
        WaveKind::Full,
    )?))?;
    let zero_mag = zero
        .coefficients
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    checks.push(Check::max("zero incident gives zero coefficients", zero_mag, 0.0));

    // superposition in the polarization
    let alpha = Vector3::new(0.0, 0.0, 1.0);
    let e1 = Vector3::new(1.0, 0.0, 0.0);
    let e2 = Vector3::new(0.4, -0.3, 0.9);
    let s1 = ctx.op.solve(IncidentField::plane(PlaneWave::new(alpha, e1, WaveKind::Full)?))?;
    let s2 = ctx.op.solve(IncidentField::plane(PlaneWave::new(alpha, e2, WaveKind::Full)?))?;
    let s12 = ctx
        .op
        .solve(IncidentField::plane(PlaneWave::new(alpha, e1 + e2, WaveKind::Full)?))?;
    let probe = Vector3::new(0.0, 0.0, 3.0);
    let lin = (s12.eval_scattered(&probe)? - s1.eval_scattered(&probe)? - s2.eval_scattered(&probe)?)
        .norm()
        / s12.eval_scattered(&probe)?.norm();
    checks.push(Check::max("superposition in the polarization", lin, 1e-10));

    // radiating decay of the scattered field
    let dir = Vector3::new(0.48, 0.6, 0.64).normalize();
    let radii = [10.0, 20.0, 40.0, 80.0];
    let mags: Vec<f64> = radii
        .iter()
        .map(|&r| Ok(ctx.sol.eval_scattered(&(dir * r))?.norm().ln()))
        .collect::<Result<_>>()?;
    let slope = fit_slope(&radii.map(f64::ln), &mags);
    checks.push(Check::max(
        "scattered field decay slope deviation from -1",
        (slope + 1.0).abs(),
        0.05,
    ));

    // Kupradze radiation condition per branch: |r (∂_r u - iκ u)| decays
    let (kp, ks) = mat.wave_numbers();
    for (branch, kappa, name) in [(0usize, kp, "pressure"), (1usize, ks, "shear")] {
        let split_at = |r: f64| -> Result<(CVec3, CVec3)> {
            let x = dir * r;
            let field = |p: &RVec3| ctx.sol.eval_scattered(p).unwrap();
            helmholtz_split(&field, &x, mat, 1e-2)
        };
        let radii = [20.0, 50.0, 90.0, 200.0];
        let mut mags = Vec::new();
        for &r in &radii {
            let h = 1e-3;
            let up = split_branch(split_at(r + h)?, branch);
            let dn = split_branch(split_at(r - h)?, branch);
            let mid = split_branch(split_at(r)?, branch);
            let radial_deriv = (up - dn) * Complex64::new(1.0 / (2.0 * h), 0.0);
            let defect = (radial_deriv - mid * Complex64::new(0.0, kappa)).norm() * r;
            mags.push(defect.ln());
        }
        let slope = fit_slope(&radii.map(f64::ln), &mags);
        checks.push(Check::max(
            format!("kupradze radiation condition slope ({name} branch)"),
            slope,
            -0.9,
        ));
    }

    // the scattered energy through large spheres stays bounded away from zero
    let quad = SphereQuadrature::new(12, 24);
    let mut integrals = Vec::new();
    for &r in &[10.0, 20.0, 30.0, 40.0, 50.0] {
        let mut acc = 0.0f64;
        for node in quad.nodes() {
            let v = ctx.sol.eval_scattered(&(node.dir * r))?;
            acc += v.norm_squared() * node.weight * r * r;
        }
        integrals.push(acc);
    }
    let min = integrals.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = integrals.iter().cloned().fold(0.0, f64::max);
    checks.push(Check::min(
        "sphere-integrated scattered energy bounded away from zero",
        min / max,
        0.5,
    ));

    Ok(checks)
}

fn split_branch(parts: (CVec3, CVec3), branch: usize) -> CVec3 {
    if branch == 0 {
        parts.0
    } else {
        parts.1
    }
}

/// Reproduce the scattered field from its boundary traces (criterion 6).
pub fn betti_solver_checks(ctx: &SolverContext) -> Result<Vec<Check>> {
    let mat = &ctx.sol.material;
    let mesh = build_mesh(&ctx.sol.shape, 32, 64)?;
    let trace_u = SurfaceDensity::new(
        &mesh,
        mesh.nodes
            .iter()
            .map(|p| ctx.sol.eval_scattered(p).unwrap())
            .collect(),
    )?;
    let trace_tu = SurfaceDensity::new(
        &mesh,
        (0..mesh.len())
            .map(|i| {
                ctx.sol
                    .scattered_traction(&mesh.nodes[i], &mesh.normals[i])
                    .unwrap()
            })
            .collect(),
    )?;
    let probes = [
        Vector3::new(0.0, 0.0, 3.0),
        Vector3::new(2.5, 0.5, 0.0),
        Vector3::new(-1.8, 1.8, 1.0),
        Vector3::new(0.5, -2.2, -1.5),
        Vector3::new(3.5, 3.5, 3.5),
    ];
    let mut worst = 0.0f64;
    for x in &probes {
        let direct = ctx.sol.eval_scattered(x)?;
        let via_traces = betti_representation(&mesh, &trace_u, &trace_tu, x, mat)?;
        worst = worst.max((via_traces - direct).norm() / direct.norm());
    }
    Ok(vec![Check::max(
        "betti representation reproduces the scattered field (5 points)",
        worst,
        1e-3,
    )])
}

/// Green-tensor reciprocity η2·G(x,y)η1 = η1·G(y,x)η2 (criterion 9).
pub fn reciprocity_checks(cfg: &ExperimentConfig) -> Result<Vec<Check>> {
    let obs = &cfg.obstacles[0];
    let op = CollocationOperator::new(&obs.shape, obs.bc, &cfg.material, &cfg.solver)?;
    let mut rng = StdRng::seed_from_u64(404);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let x = rand_unit(&mut rng) * (2.2 + rng.random::<f64>());
        let y = rand_unit(&mut rng) * (2.2 + rng.random::<f64>());
        if (x - y).norm() < 0.5 {
            continue;
        }
        let eta1 = rand_unit(&mut rng);
        let eta2 = rand_unit(&mut rng);
        let sol_y = op.solve(IncidentField::point_source(y, eta1))?;
        let sol_x = op.solve(IncidentField::point_source(x, eta2))?;
        let forward = complexify(&eta2).dot(&sol_y.eval_total(&x)?);
        let backward = complexify(&eta1).dot(&sol_x.eval_total(&y)?);
        worst = worst.max((forward - backward).norm() / forward.norm().max(1e-300));
    }
    Ok(vec![Check::max(
        "green tensor reciprocity (5 random pairs)",
        worst,
        1e-4,
    )])
}

// ---------------------------------------------------------------------------
// far-field checks (acceptance criteria 7, 8, 10)
// ---------------------------------------------------------------------------

/// Route agreement and the O(1/r²) remainder of the far-field expansion
/// (criterion 7).
pub fn farfield_consistency_checks(ctx: &SolverContext) -> Result<Vec<Check>> {
    let mat = &ctx.sol.material;
    let quad = SphereQuadrature::new(8, 16);
    let dirs: Vec<RVec3> = quad.nodes().iter().map(|n| n.dir).collect();
    let (p_pat, s_pat) = farfield_from_sources(&ctx.sol, &dirs)?;

    // boundary-integral route from traces on the collocation mesh
    let mesh = ctx.op.mesh();
    let trace_u = SurfaceDensity::new(
        mesh,
        mesh.nodes
            .iter()
            .map(|p| ctx.sol.eval_scattered(p).unwrap())
            .collect(),
    )?;
    let trace_tu = SurfaceDensity::new(
        mesh,
        (0..mesh.len())
            .map(|i| {
                ctx.sol
                    .scattered_traction(&mesh.nodes[i], &mesh.normals[i])
                    .unwrap()
            })
            .collect(),
    )?;
    let scale = p_pat.max_norm().max(s_pat.max_norm());
    let mut route_dev = 0.0f64;
    for (i, dir) in dirs.iter().enumerate() {
        let (p_bi, s_bi) = farfield_boundary_integral(mesh, &trace_u, &trace_tu, dir, mat)?;
        route_dev = route_dev.max((p_bi - p_pat.values[i]).norm() / scale);
        route_dev = route_dev.max((s_bi - s_pat.values[i]).norm() / scale);
    }

    // scaled-field remainder: |r e^{-iκ_p r} u_p(r x̂) - p∞(x̂)| ~ 1/r
    let dir = Vector3::new(0.6, 0.48, 0.64).normalize();
    let (p_ref, s_ref) = farfield_from_sources(&ctx.sol, &[dir])?;
    let kp = mat.kappa_p();
    let ks = mat.kappa_s();
    let radii = [20.0, 40.0, 80.0, 160.0, 320.0];
    let mut p_mags = Vec::new();
    let mut s_mags = Vec::new();
    for &r in &radii {
        let x = dir * r;
        let field = |p: &RVec3| ctx.sol.eval_scattered(p).unwrap();
        let (u_p, u_s) = helmholtz_split(&field, &x, mat, 1e-2)?;
        let p_rem = (u_p * Complex64::from_polar(r, -kp * r) - p_ref.values[0]).norm();
        let s_rem = (u_s * Complex64::from_polar(r, -ks * r) - s_ref.values[0]).norm();
        p_mags.push(p_rem.ln());
        s_mags.push(s_rem.ln());
    }
    let p_slope = fit_slope(&radii.map(f64::ln), &p_mags);
    let s_slope = fit_slope(&radii.map(f64::ln), &s_mags);

    Ok(vec![
        Check::max("far-field route agreement (relative)", route_dev, 1e-3),
        Check::max(
            "pressure remainder decay slope deviation from -1",
            (p_slope + 1.0).abs(),
            0.1,
        ),
        Check::max(
            "shear remainder decay slope deviation from -1",
            (s_slope + 1.0).abs(),
            0.1,
        ),
    ])
}

/// Pattern structure, far-field matrix decomposition and the four-way split
/// (criterion 8).
pub fn farfield_structure_checks(ctx: &SolverContext) -> Result<Vec<Check>> {
    let alpha = Vector3::new(0.0, 0.0, 1.0);
    let quad = SphereQuadrature::new(8, 16);
    let dirs: Vec<RVec3> = quad.nodes().iter().map(|n| n.dir).collect();

    let (p_pat, s_pat) = farfield_from_sources(&ctx.sol, &dirs)?;
    let structure = p_pat.structure_defect().max(s_pat.structure_defect());

    // far-field matrix from three basis solves on the shared factorization
    let mut columns = Vec::with_capacity(3);
    for j in 0..3 {
        let mut eta = RVec3::zeros();
        eta[j] = 1.0;
        let sol = ctx
            .op
            .solve(IncidentField::plane(PlaneWave::new(alpha, eta, WaveKind::Full)?))?;
        let (p, s) = farfield_from_sources(&sol, &dirs)?;
        let full: Vec<CVec3> = p.values.iter().zip(&s.values).map(|(a, b)| a + b).collect();
        columns.push(full);
    }
    let matrices: Vec<CMat3> = (0..dirs.len())
        .map(|i| {
            let mut m = CMat3::zeros();
            for j in 0..3 {
                for r in 0..3 {
                    m[(r, j)] = columns[j][i][r];
                }
            }
            m
        })
        .collect();

    // matrix linearity: M η equals the direct solve with polarization η
    let eta = Vector3::new(0.3, -0.7, 0.64);
    let sol_eta = ctx
        .op
        .solve(IncidentField::plane(PlaneWave::new(alpha, eta, WaveKind::Full)?))?;
    let (p_eta, s_eta) = farfield_from_sources(&sol_eta, &dirs)?;
    let mut lin_dev = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..dirs.len() {
        let direct = p_eta.values[i] + s_eta.values[i];
        let via_matrix = matrices[i] * complexify(&eta);
        scale = scale.max(direct.norm());
        lin_dev = lin_dev.max((direct - via_matrix).norm());
    }
    let lin_dev = lin_dev / scale;

    // decomposition: full far field = pure-pressure + pure-shear far fields
    let sol_p = ctx
        .op
        .solve(IncidentField::plane(PlaneWave::new(alpha, eta, WaveKind::Pressure)?))?;
    let sol_s = ctx
        .op
        .solve(IncidentField::plane(PlaneWave::new(alpha, eta, WaveKind::Shear)?))?;
    let (pp, ps) = farfield_from_sources(&sol_p, &dirs)?;
    let (sp, ss) = farfield_from_sources(&sol_s, &dirs)?;
    let mut dec_dev = 0.0f64;
    for i in 0..dirs.len() {
        let full = p_eta.values[i] + s_eta.values[i];
        let sum = pp.values[i] + ps.values[i] + sp.values[i] + ss.values[i];
        dec_dev = dec_dev.max((full - sum).norm());
    }
    let dec_dev = dec_dev / scale;

    // four-way split reassembly is exact projector algebra
    let mut split_dev = 0.0f64;
    for (i, dir) in dirs.iter().enumerate() {
        let blocks = split_pattern(&matrices[i], dir, &alpha)?;
        let sum = blocks[0] + blocks[1] + blocks[2] + blocks[3];
        split_dev = split_dev.max((sum - matrices[i]).norm() / matrices[i].norm().max(1e-300));
    }

    Ok(vec![
        Check::max("pattern parallel/tangential structure", structure, 1e-10),
        Check::max("far-field matrix linearity", lin_dev, 1e-10),
        Check::max("pressure+shear incident decomposition", dec_dev, 1e-4),
        Check::max("four-way split reassembles the matrix", split_dev, 1e-14),
    ])
}

/// Green-tensor large-source asymptotics (criterion 10).
pub fn green_asymptotics_checks(cfg: &ExperimentConfig) -> Result<Vec<Check>> {
    let obs = &cfg.obstacles[0];
    let alpha = Vector3::new(0.0, 0.0, 1.0);
    let eta = Vector3::new(1.0, 0.0, 1.0) / 2.0f64.sqrt();
    let probes = [
        Vector3::new(1.5, 0.2, -0.3),
        Vector3::new(-0.4, 1.8, 0.6),
        Vector3::new(0.1, -0.2, 2.2),
    ];
    let rows = green_asymptotics_check(
        &obs.shape,
        obs.bc,
        &cfg.material,
        &alpha,
        &eta,
        &probes,
        &[20.0, 40.0, 80.0],
        &cfg.solver,
    )?;
    // unscaled residual should drop ~4x per doubling; scaled stays bounded
    let mut ratio_dev = 0.0f64;
    for pair in rows.windows(2) {
        let ratio = pair[0].residual / pair[1].residual;
        ratio_dev = ratio_dev.max((ratio / 4.0 - 1.0).abs());
    }
    let growth = rows.last().unwrap().scaled_residual / rows[0].scaled_residual;
    Ok(vec![
        Check::max(
            "green asymptotics consecutive ratio within 30% of 4",
            ratio_dev,
            0.3,
        ),
        Check::max("green asymptotics scaled residual growth", growth, 1.3),
    ])
}

// ---------------------------------------------------------------------------
// rellich checks (acceptance criterion 11)
// ---------------------------------------------------------------------------

/// Synthetic outgoing/incoming multipoles through the mode analyzer.
pub fn rellich_synthetic_checks(mat: &Material) -> Result<Vec<Check>> {
    let ks = mat.kappa_s();
    let radii = [10.0, 18.0, 33.0, 60.0];
    let quad = SphereQuadrature::new(8, 17);
    let sqrt4pi = (4.0 * std::f64::consts::PI).sqrt();

    let outgoing = |x: &RVec3| -> Result<CVec3> {
        let h = sph_hankel1(0, ks * x.norm())?;
        Ok(CVec3::new(h, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)))
    };
    let incoming = |x: &RVec3| -> Result<CVec3> {
        let h = sph_hankel2(0, ks * x.norm())?;
        Ok(CVec3::new(h, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)))
    };

    let fit_for = |field: &dyn Fn(&RVec3) -> Result<CVec3>| -> Result<(f64, f64)> {
        let rows: Vec<Vec<CVec3>> = radii
            .iter()
            .map(|&r| sphere_mode_coefficients(field, r, 2, &quad))
            .collect::<Result<_>>()?;
        let fits = fit_hankel_modes(&radii, &rows, ks, 2)?;
        let mono = &fits[crate::special::mode_flat_index(0, 0)];
        Ok((mono.beta[0].norm(), mono.gamma[0].norm()))
    };
    let (beta_out, gamma_out) = fit_for(&outgoing)?;
    let (beta_in, gamma_in) = fit_for(&incoming)?;

    Ok(vec![
        Check::max(
            "outgoing multipole beta recovery error",
            (beta_out - sqrt4pi).abs() / sqrt4pi,
            1e-8,
        ),
        Check::max(
            "outgoing multipole cross-branch leakage",
            gamma_out / sqrt4pi,
            1e-8,
        ),
        Check::max(
            "incoming multipole gamma recovery error",
            (gamma_in - sqrt4pi).abs() / sqrt4pi,
            1e-8,
        ),
        Check::max(
            "incoming multipole cross-branch leakage",
            beta_in / sqrt4pi,
            1e-8,
        ),
    ])
}

/// Outgoing purity of the solver's scattered field.
pub fn rellich_solver_checks(ctx: &SolverContext) -> Result<Vec<Check>> {
    let mat = &ctx.sol.material;
    let field = |x: &RVec3| ctx.sol.eval_scattered(x);
    let radii = [10.0, 16.0, 26.0, 42.0, 68.0];
    let report = rellich_modes(&field, &radii, 4, mat, 1e-2)?;
    Ok(vec![
        Check::max(
            "scattered field outgoing purity max |gamma|/|beta|",
            report.outgoing_purity(1e-5),
            1e-2,
        ),
        Check::min("scattered field has nonzero outgoing content", report.max_beta(), 1e-10),
    ])
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

/// Run one named verification suite.
pub fn run_suite(name: &str, cfg: &ExperimentConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = std::time::Instant::now();
    let mat = &cfg.material;
    let checks = match name {
        "kernels" => {
            let mut c = kernel_checks(mat)?;
            c.extend(traction_checks(mat));
            c.extend(plane_wave_checks(mat));
            c
        }
        "potentials" => {
            let mut c = single_layer_checks(mat)?;
            c.extend(betti_entire_checks(mat)?);
            c.extend(jump_checks(mat)?);
            c
        }
        "solver" => {
            let ctx = solver_context(cfg)?;
            let mut c = solver_residual_checks(cfg)?;
            c.extend(solver_property_checks(&ctx)?);
            c.extend(betti_solver_checks(&ctx)?);
            c.extend(reciprocity_checks(cfg)?);
            c
        }
        "farfield" => {
            let ctx = solver_context(cfg)?;
            let mut c = farfield_consistency_checks(&ctx)?;
            c.extend(farfield_structure_checks(&ctx)?);
            c.extend(green_asymptotics_checks(cfg)?);
            c
        }
        "rellich" => {
            let ctx = solver_context(cfg)?;
            let mut c = rellich_synthetic_checks(mat)?;
            c.extend(rellich_solver_checks(&ctx)?);
            c
        }
        other => {
            return Err(Error::Config(format!(
                "unknown verify suite '{other}' (expected kernels, potentials, solver, farfield or rellich)"
            )))
        }
    };
    Ok(SuiteReport::new(name, checks, start.elapsed().as_secs_f64()))
}
