use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use quasilattice::cluster::ClusterSpec;
use quasilattice::generator::{parse_shift, Strip};
use quasilattice::render::RenderOptions;
use quasilattice::{catalog, Rational};
use serde::Deserialize;

use crate::Usage;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Box,
    Bfs,
    Bm,
    All,
}

/// Flags shared by the generating subcommands; any flag overrides the
/// matching key of the optional JSON config file.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// JSON config file with the same keys as the long flags.
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub cluster: Option<String>,
    #[arg(long)]
    pub cluster_file: Option<PathBuf>,
    /// `generic`, `zero`, `center` or comma-separated exact values.
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<String>,
    /// Ball radius in edge units (integer, fraction or decimal).
    #[arg(long)]
    pub radius: Option<String>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub xyz: Option<PathBuf>,
    /// Circle radius for SVG points, physical units.
    #[arg(long)]
    pub point_size: Option<f64>,
    #[arg(long)]
    pub no_edges: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ShiftValue {
    Keyword(String),
    List(Vec<String>),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    cluster: Option<String>,
    cluster_file: Option<PathBuf>,
    shift: Option<ShiftValue>,
    radius: Option<serde_json::Value>,
    mode: Option<Mode>,
    workers: Option<usize>,
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
    xyz: Option<PathBuf>,
    point_size: Option<f64>,
    edges: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cluster: ClusterSpec,
    pub shift: String,
    pub radius: Rational,
    pub mode: Mode,
    pub workers: Option<usize>,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub xyz: Option<PathBuf>,
    pub render: RenderOptions,
}

pub fn load_cluster_file(path: &Path) -> anyhow::Result<ClusterSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("cluster file {}: {e}", path.display())))?;
    let spec = ClusterSpec::from_json_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let report = spec.validate();
    if !report.is_ok() {
        let issues: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
        return Err(Usage(format!("{}: invalid cluster: {}", path.display(), issues.join("; "))).into());
    }
    Ok(spec)
}

pub fn lookup_cluster(name: &str) -> anyhow::Result<ClusterSpec> {
    Ok(catalog(name).map_err(|e| Usage(e.to_string()))?)
}

impl RunConfig {
    pub fn resolve(args: &RunArgs) -> anyhow::Result<RunConfig> {
        let file = match &args.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Usage(format!("config {}: {e}", p.display())))?;
                serde_json::from_str::<ConfigFile>(&text).map_err(|e| Usage(format!("config {}: {e}", p.display())))?
            }
            None => ConfigFile::default(),
        };
        let cluster_file = args.cluster_file.clone().or(file.cluster_file);
        let cluster_name = args.cluster.clone().or(file.cluster);
        let cluster = match (cluster_name, cluster_file) {
            (Some(_), Some(_)) => return Err(Usage("give either a cluster name or a cluster file, not both".into()).into()),
            (Some(name), None) => lookup_cluster(&name)?,
            (None, Some(path)) => load_cluster_file(&path)?,
            (None, None) => return Err(Usage("no cluster given (--cluster or --cluster-file)".into()).into()),
        };
        let shift = match (&args.shift, file.shift) {
            (Some(s), _) => s.clone(),
            (None, Some(ShiftValue::Keyword(s))) => s,
            (None, Some(ShiftValue::List(v))) => v.join(","),
            (None, None) => "generic".to_string(),
        };
        let radius_text = match (&args.radius, file.radius) {
            (Some(r), _) => r.clone(),
            (None, Some(serde_json::Value::String(s))) => s,
            (None, Some(serde_json::Value::Number(n))) => n.to_string(),
            (None, Some(other)) => return Err(Usage(format!("radius must be a number or string, got {other}")).into()),
            (None, None) => "5".to_string(),
        };
        let radius: Rational = radius_text.parse().map_err(|e| Usage(format!("radius {radius_text:?}: {e}")))?;
        if radius.signum() <= 0 {
            return Err(Usage(format!("radius must be positive, got {radius}")).into());
        }
        let mut render = RenderOptions::default();
        if let Some(s) = args.point_size.or(file.point_size) {
            render.point_radius = s;
        }
        render.edges = !args.no_edges && file.edges.unwrap_or(true);
        Ok(RunConfig {
            cluster,
            shift,
            radius,
            mode: args.mode.or(file.mode).unwrap_or(Mode::Bfs),
            workers: args.workers.or(file.workers),
            out: args.out.clone().or(file.out),
            svg: args.svg.clone().or(file.svg),
            xyz: args.xyz.clone().or(file.xyz),
            render,
        })
    }

    pub fn strip(&self) -> anyhow::Result<Strip> {
        strip_for(&self.cluster, &self.shift)
    }
}

pub fn strip_for(cluster: &ClusterSpec, shift: &str) -> anyhow::Result<Strip> {
    let projectors = quasilattice::scheme::build_projectors(cluster)?;
    let gamma = parse_shift(shift, &projectors).map_err(|e| Usage(e.to_string()))?;
    Ok(Strip::with_projectors(cluster.clone(), projectors, gamma)?)
}
