//! Far-field data emission: pattern CSVs, the far-field matrix JSON and a
//! metadata echo. Numeric output uses 17 significant digits and '\n' line
//! endings so identical configs produce identical bytes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;

use crate::config::ExperimentConfig;
use crate::elasto::{CVec3, RVec3};
use crate::farfield::{farfield_from_sources, FarFieldPattern, PatternTag};
use crate::solver::{CollocationOperator, IncidentField, ResidualReport};
use crate::{Error, Result};

/// Paths written by a far-field run.
#[derive(Debug, Clone, Serialize)]
pub struct FarFieldFiles {
    pub pattern_csv: Vec<PathBuf>,
    pub matrix_json: PathBuf,
    pub metadata_json: PathBuf,
}

fn fmt_f(x: f64) -> String {
    // 17 significant digits: 1 leading + 16 fractional in scientific form
    format!("{x:.16e}")
}

fn pattern_csv(directions: &[(f64, f64)], values: &[CVec3]) -> String {
    let mut out = String::new();
    out.push_str("theta,phi,re_x,im_x,re_y,im_y,re_z,im_z\n");
    for ((theta, phi), v) in directions.iter().zip(values) {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_f(*theta),
            fmt_f(*phi),
            fmt_f(v[0].re),
            fmt_f(v[0].im),
            fmt_f(v[1].re),
            fmt_f(v[1].im),
            fmt_f(v[2].re),
            fmt_f(v[2].im),
        );
    }
    out
}

/// Parse a pattern CSV back into angle pairs and vector values.
pub fn parse_pattern_csv(text: &str) -> Result<(Vec<(f64, f64)>, Vec<CVec3>)> {
    let mut angles = Vec::new();
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            continue;
        }
        let cols: Vec<f64> = line
            .split(',')
            .map(|c| {
                c.parse::<f64>()
                    .map_err(|e| Error::Config(format!("bad csv number '{c}': {e}")))
            })
            .collect::<Result<_>>()?;
        if cols.len() != 8 {
            return Err(Error::Config(format!(
                "csv row {i} has {} columns, expected 8",
                cols.len()
            )));
        }
        angles.push((cols[0], cols[1]));
        values.push(CVec3::new(
            num_complex::Complex64::new(cols[2], cols[3]),
            num_complex::Complex64::new(cols[4], cols[5]),
            num_complex::Complex64::new(cols[6], cols[7]),
        ));
    }
    Ok((angles, values))
}

struct EmittedFiles {
    written: Vec<PathBuf>,
}

impl EmittedFiles {
    fn write(&mut self, path: &Path, contents: &str) -> Result<()> {
        std::fs::write(path, contents)?;
        self.written.push(path.to_path_buf());
        Ok(())
    }

    fn cleanup(&self) {
        for p in &self.written {
            let _ = std::fs::remove_file(p);
        }
    }
}

/// Compute and emit far-field data for a single-obstacle config.
pub fn cmd_farfield(cfg: &ExperimentConfig) -> Result<FarFieldFiles> {
    cfg.validate()?;
    if cfg.obstacles.len() != 1 {
        return Err(Error::Config(
            "farfield runs expect exactly one obstacle".into(),
        ));
    }
    let dir = PathBuf::from(&cfg.outputs.directory);
    std::fs::create_dir_all(&dir)?;
    let mut emitted = EmittedFiles {
        written: Vec::new(),
    };
    match emit_farfield(cfg, &dir, &mut emitted) {
        Ok(files) => Ok(files),
        Err(e) => {
            emitted.cleanup();
            Err(e)
        }
    }
}

fn emit_farfield(
    cfg: &ExperimentConfig,
    dir: &Path,
    emitted: &mut EmittedFiles,
) -> Result<FarFieldFiles> {
    let obs = &cfg.obstacles[0];
    let op = CollocationOperator::new(&obs.shape, obs.bc, &cfg.material, &cfg.solver)?;

    // direction grid (uniform product grid over the full sphere)
    let (nt, np) = (cfg.directions.n_theta, cfg.directions.n_phi);
    let mut angles = Vec::with_capacity(nt * np);
    let mut dirs: Vec<RVec3> = Vec::with_capacity(nt * np);
    for i in 0..nt {
        let theta = std::f64::consts::PI * (i as f64 + 0.5) / nt as f64;
        for j in 0..np {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / np as f64;
            angles.push((theta, phi));
            dirs.push(RVec3::new(
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            ));
        }
    }

    let sol = op.solve(cfg.incident_field()?)?;
    let (p_pat, s_pat) = farfield_from_sources(&sol, &dirs)?;
    let full = FarFieldPattern {
        directions: dirs.clone(),
        values: p_pat
            .values
            .iter()
            .zip(&s_pat.values)
            .map(|(a, b)| a + b)
            .collect(),
        tag: PatternTag::Full,
    };

    let mut pattern_csv_paths = Vec::new();
    for (name, pat) in [("p_part", &p_pat), ("s_part", &s_pat), ("full", &full)] {
        let path = dir.join(format!("pattern_{name}.csv"));
        emitted.write(&path, &pattern_csv(&angles, &pat.values))?;
        pattern_csv_paths.push(path);
    }

    // far-field matrix: three basis solves on the same factorization
    let alpha = match &cfg.incident {
        crate::config::IncidentConfig::Plane { alpha, .. } => {
            RVec3::new(alpha[0], alpha[1], alpha[2])
        }
        crate::config::IncidentConfig::PointSource { .. } => RVec3::new(0.0, 0.0, 1.0),
    };
    let mut residual: f64 = sol.residual_report.relative;
    let mut columns = Vec::with_capacity(3);
    for j in 0..3 {
        let mut eta = RVec3::zeros();
        eta[j] = 1.0;
        let wave = crate::elasto::PlaneWave::new(alpha, eta, crate::elasto::WaveKind::Full)?;
        let basis = op.solve(IncidentField::plane(wave))?;
        residual = residual.max(basis.residual_report.relative);
        let (p, s) = farfield_from_sources(&basis, &dirs)?;
        let col: Vec<CVec3> = p.values.iter().zip(&s.values).map(|(a, b)| a + b).collect();
        columns.push(col);
    }
    let mut matrices = serde_json::Map::new();
    for i in 0..dirs.len() {
        let mut entries = Vec::with_capacity(9);
        for r in 0..3 {
            for c in 0..3 {
                entries.push(json!([columns[c][i][r].re, columns[c][i][r].im]));
            }
        }
        matrices.insert(i.to_string(), json!(entries));
    }
    let matrix_json = dir.join("farfield_matrix.json");
    let matrix_doc = json!({
        "incident_direction": [alpha[0], alpha[1], alpha[2]],
        "directions": dirs.iter().map(|d| json!([d[0], d[1], d[2]])).collect::<Vec<_>>(),
        "matrices": matrices,
    });
    emitted.write(&matrix_json, &serde_json::to_string_pretty(&matrix_doc)?)?;

    let metadata_json = dir.join("metadata.json");
    let metadata = json!({
        "tool": "elastoscatter",
        "version": crate::VERSION,
        "config": cfg,
        "residual_report": residual_json(&sol.residual_report),
        "pattern_rows": dirs.len(),
    });
    emitted.write(&metadata_json, &serde_json::to_string_pretty(&metadata)?)?;

    Ok(FarFieldFiles {
        pattern_csv: pattern_csv_paths,
        matrix_json,
        metadata_json,
    })
}

fn residual_json(r: &ResidualReport) -> serde_json::Value {
    json!({
        "max_absolute": r.max_absolute,
        "data_scale": r.data_scale,
        "relative": r.relative,
    })
}
