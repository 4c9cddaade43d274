use elastoscatter::config::ExperimentConfig;
use elastoscatter::elasto::{Material, PlaneWave, WaveKind};
use elastoscatter::geometry::{build_mesh, held_out_mesh, ObstacleShape};
use elastoscatter::solver::{BoundaryCondition, CollocationOperator, IncidentField, SolverParams};
use nalgebra::Vector3;

fn main() {
    faer::set_global_parallelism(faer::Par::rayon(0));
    let cfg = ExperimentConfig::default_rigid_sphere();
    let shape = ObstacleShape::Sphere {
        radius: 1.0,
        center: [0.0; 3],
    };
    let mat = Material::new(2.0, 1.0, 2.0).unwrap();
    let wave = PlaneWave::new(
        Vector3::new(0.0, 0.0, 1.0),
        Vector3::new(0.0, 0.0, 1.0),
        WaveKind::Full,
    )
    .unwrap();
    let incident = IncidentField::plane(wave);

    for (nt, np, shrink, step) in [
        (24usize, 48usize, 0.7f64, 1usize),
        (24, 48, 0.7, 2),
        (32, 64, 0.7, 1),
    ] {
        let params = SolverParams {
            n_theta: nt,
            n_phi: np,
            shrink,
            svd_threshold: 1e-12,
            source_step: step,
        };
        let t0 = std::time::Instant::now();
        let op = CollocationOperator::new(&shape, BoundaryCondition::Dirichlet, &mat, &params)
            .unwrap();
        let sol = op.solve(incident.clone()).unwrap();
        // collocation-node residual
        let mesh = build_mesh(&shape, nt, np).unwrap();
        let mut coll = 0.0f64;
        let mut scale = 0.0f64;
        for i in 0..mesh.len() {
            let x = mesh.nodes[i];
            let total = sol.eval_total(&x).unwrap();
            let inc = incident.field(&x, &mat).unwrap();
            coll = coll.max(total.norm());
            scale = scale.max(inc.norm());
        }
        println!(
            "nt={nt} np={np} shrink={shrink} step={step}: coll={:.3e} held={:.3e} ({}x{} matrix, rank info) in {:?}",
            coll / scale,
            sol.residual_report.relative,
            3 * mesh.len(),
            3 * op.sources().len(),
            t0.elapsed()
        );
    }
    let _ = cfg;
}
