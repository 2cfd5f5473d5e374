//! Command-line front end. Domain errors print `{stage, kind, detail}` on
//! stderr and exit with 1; usage errors exit with 2.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::drawing::{
    add_root, apply_reduction, balanced_reduction_choice, check_planarity, check_straight_planarity, classify_faces, draw,
    emit_svg, random_reduction_choice, straight_line_drawing, GridDrawing, SvgStyle,
};
use crate::duality::{
    chi, chi_inverse, dual_labelling, primal_labelling, validate_regular_decomposition, validate_regular_labelling, xi,
    xi_inverse, DualPair, RegularDecomposition, RegularLabelling,
};
use crate::even::{
    compute_even_regular_decomposition, lambda, lambda_inverse, lambda_star, lambda_star_inverse, validate_reduced_regular,
    validate_reduced_schnyder, ReducedRegularDecomposition, ReducedSchnyderDecomposition,
};
use crate::orientation::{
    check_dd2, compute_dd2_orientation, compute_p_p1_orientation, FracOrientation, Lattice, DEFAULT_LATTICE_CAP,
};
use crate::planar_map::{AngulationView, PlaneMap, RegularView};
use crate::sampler::{concentration_experiment, encode, enumerate_pairs, sample_rng, DEFAULT_MAX_ATTEMPTS};
use crate::schnyder::{
    gamma, phi, phi_inverse, psi, psi_inverse, validate_labelling, validate_schnyder, CornerLabelling, SchnyderDecomposition,
};
use crate::Error;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser, Debug)]
#[command(name = "schnyder-kit", version, about = "Schnyder decompositions, their duals and grid drawings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a map, and optionally a structure file on it.
    Validate(ValidateArgs),
    /// Compute a d/(d-2) orientation of a d-angulation.
    Orient(OrientArgs),
    /// Translate between orientations, labellings and decompositions.
    Convert(ConvertArgs),
    /// Dual map, with a transported labelling or decomposition.
    Dualize(DualizeArgs),
    /// The lattice of d/(d-2) orientations.
    Lattice(LatticeArgs),
    /// Grid drawing of a 4-regular map of mincut 4.
    Draw(DrawArgs),
    /// Uniform random pairs and grid-size statistics.
    Sample(SampleArgs),
    /// Every (quadrangulation, even decomposition) pair with n faces.
    Enumerate(EnumerateArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViewKind {
    Angulation,
    Regular,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    /// Map file.
    pub map: PathBuf,
    /// Face degree of an angulation or vertex degree of a regular map;
    /// read off the outer face or vertex 0 when absent.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long = "as", value_enum, default_value = "angulation")]
    pub view: ViewKind,
    /// Root vertex of a regular map; defaults to the root stored in the file, or 0.
    #[arg(long)]
    pub root: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// Orientation, labelling, decomposition or drawing file to check against the map.
    #[arg(long)]
    pub check: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OrientArgs {
    pub map: PathBuf,
    #[arg(long)]
    pub d: Option<usize>,
    /// Even orientation of a 2p-angulation (a doubled p/(p-1) orientation).
    #[arg(long)]
    pub even: bool,
    /// Minimum of the lattice.
    #[arg(long)]
    pub minimal: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Orientation,
    Labelling,
    Schnyder,
    Reduced,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// Structure file to convert.
    pub input: PathBuf,
    #[command(flatten)]
    pub map: MapOption,
    #[arg(long, value_enum)]
    pub from: Form,
    #[arg(long, value_enum)]
    pub to: Form,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MapOption {
    /// Map the structure lives on.
    #[arg(long = "map")]
    pub path: PathBuf,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long = "as", value_enum, default_value = "angulation")]
    pub view: ViewKind,
    #[arg(long)]
    pub root: Option<usize>,
}

#[derive(Args, Debug)]
pub struct DualizeArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// Labelling or decomposition to carry over to the dual.
    #[arg(long, requires = "structure_output")]
    pub structure: Option<PathBuf>,
    #[arg(long)]
    pub structure_output: Option<PathBuf>,
    /// Where to write the dual map.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeAction {
    Count,
    Enumerate,
    Min,
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    pub map: PathBuf,
    #[arg(value_enum)]
    pub action: LatticeAction,
    #[arg(long)]
    pub d: Option<usize>,
    /// The sublattice of even orientations of a 2p-angulation.
    #[arg(long)]
    pub even: bool,
    #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
    pub cap: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DrawMode {
    Orthogonal,
    Straightline,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    Balanced,
    Random,
}

#[derive(Args, Debug)]
pub struct DrawArgs {
    pub map: PathBuf,
    /// Root vertex; defaults to the root stored in the file, or 0.
    #[arg(long)]
    pub root: Option<usize>,
    #[arg(long, value_enum, default_value = "orthogonal")]
    pub mode: DrawMode,
    /// Delete reducible rows and columns.
    #[arg(long)]
    pub compact: bool,
    /// How `--compact` splits the partly reducible faces.
    #[arg(long, value_enum, default_value = "balanced")]
    pub split: Split,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Route the root vertex and its edges as well.
    #[arg(long)]
    pub with_root: bool,
    /// Draw grid lines in the SVG.
    #[arg(long)]
    pub grid: bool,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    /// Number of faces of the quadrangulation.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: u64,
    /// Worker threads; SCHNYDER_KIT_JOBS overrides the default of 1.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Stats report (JSON); printed when absent.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the first sample's quadrangulation here.
    #[arg(long)]
    pub map_output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub cap: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// A failed run: which step, the error kind and a message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub stage: &'static str,
    pub kind: String,
    pub detail: String,
}

impl Failure {
    fn domain(stage: &'static str) -> impl Fn(Error) -> Failure {
        move |e| Failure { stage, kind: e.kind().to_string(), detail: e.to_string() }
    }

    fn io(stage: &'static str, path: &Path, e: std::io::Error) -> Failure {
        Failure { stage, kind: "Io".into(), detail: format!("{}: {e}", path.display()) }
    }

    fn invalid(stage: &'static str, detail: String) -> Failure {
        Failure { stage, kind: "ValidationFailed".into(), detail }
    }

    pub fn to_json(&self) -> String {
        json!({"stage": self.stage, "kind": self.kind, "detail": self.detail}).to_string()
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Parses `argv` and runs it; returns the exit code.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    // A panic is a bug, but it still leaves as a structured error.
    std::panic::set_hook(Box::new(|_| {}));
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli.command, &mut *stdout)));
    let _ = std::panic::take_hook();
    let result = result.unwrap_or_else(|payload| {
        let detail = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(Failure { stage: "internal", kind: "Panic".into(), detail })
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.to_json());
            1
        }
    }
}

/// Runs one command; `Ok(1)` is a completed validation that found problems.
pub fn run(cmd: &Command, out: &mut dyn std::io::Write) -> Outcome<i32> {
    match cmd {
        Command::Validate(a) => validate(a, out),
        Command::Orient(a) => orient(a, out).map(|_| 0),
        Command::Convert(a) => convert(a, out).map(|_| 0),
        Command::Dualize(a) => dualize(a, out).map(|_| 0),
        Command::Lattice(a) => lattice(a, out).map(|_| 0),
        Command::Draw(a) => draw_cmd(a, out).map(|_| 0),
        Command::Sample(a) => sample(a, out).map(|_| 0),
        Command::Enumerate(a) => enumerate(a, out).map(|_| 0),
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::io("read", path, e))
}

fn load_map(path: &Path) -> Outcome<PlaneMap> {
    PlaneMap::from_json(&read(path)?).map_err(Failure::domain("load"))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn std::io::Write) -> Outcome<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io("write", p, e)),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::io("write", Path::new("<stdout>"), e)),
    }
}

fn angulation(map: &PlaneMap, d: Option<usize>) -> Outcome<AngulationView> {
    let d = d.unwrap_or_else(|| map.face_degree(map.outer_face()));
    map.as_angulation(d).map_err(Failure::domain("load"))
}

fn regular(map: &PlaneMap, d: Option<usize>, root: Option<usize>) -> Outcome<RegularView> {
    let d = d.unwrap_or_else(|| map.degree(0));
    let root = root.or(map.root_vertex()).unwrap_or(0);
    map.as_regular(d, root).map_err(Failure::domain("load"))
}

enum View {
    Angulation(AngulationView),
    Regular(RegularView),
}

fn view(map: &PlaneMap, kind: ViewKind, d: Option<usize>, root: Option<usize>) -> Outcome<View> {
    Ok(match kind {
        ViewKind::Angulation => View::Angulation(angulation(map, d)?),
        ViewKind::Regular => View::Regular(regular(map, d, root)?),
    })
}

fn validate(a: &ValidateArgs, out: &mut dyn std::io::Write) -> Outcome<i32> {
    let map = load_map(&a.map.map)?;
    let v = view(&map, a.map.view, a.map.d, a.map.root)?;
    let girth = map.girth().ok();
    let mut report = json!({
        "vertices": map.vertex_count(),
        "edges": map.edge_count(),
        "faces": map.face_count(),
        "girth": girth,
    });
    match &v {
        View::Angulation(ang) => {
            report["as"] = json!("angulation");
            report["d"] = json!(ang.d);
            report["decomposition_exists"] = json!(girth == Some(ang.d));
        }
        View::Regular(rv) => {
            report["as"] = json!("regular");
            report["d"] = json!(rv.d);
            report["root"] = json!(rv.root);
            report["mincut_at_least_d"] = json!(map.mincut_at_least(rv.d));
        }
    }
    let mut violations: Vec<String> = Vec::new();
    if let Some(path) = &a.check {
        let text = read(path)?;
        let (kind, found) = check_structure(&v, &text)?;
        report["checked"] = json!(kind);
        violations = found;
    }
    report["violations"] = json!(violations);
    report["valid"] = json!(violations.is_empty());
    emit(None, &serde_json::to_string_pretty(&report).expect("report serializes"), out)?;
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn strings<T: ToString>(v: Vec<T>) -> Vec<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

/// Recognizes the file by its fields and checks it on the view.
fn check_structure(v: &View, text: &str) -> Outcome<(&'static str, Vec<String>)> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::domain("load")(Error::Format(e.to_string())))?;
    let has = |k: &str| value.get(k).is_some();
    let load = Failure::domain("load");
    Ok(match v {
        View::Angulation(ang) => {
            if has("k") && has("values") {
                let o = FracOrientation::from_json(text).map_err(load)?;
                ("orientation", check_dd2(ang, &o).err().into_iter().collect())
            } else if has("corner_colors") {
                let l = CornerLabelling::from_json(text).map_err(load)?;
                ("labelling", strings(validate_labelling(ang, &l)))
            } else if value.get("reduced") == Some(&json!(true)) {
                let rs = ReducedSchnyderDecomposition::from_json(text).map_err(load)?;
                ("reduced", strings(validate_reduced_schnyder(ang, &rs)))
            } else if has("dart_colors") {
                let s = SchnyderDecomposition::from_json(text).map_err(load)?;
                ("schnyder", strings(validate_schnyder(ang, &s)))
            } else {
                return Err(load(Error::Format("unrecognized structure file".into())));
            }
        }
        View::Regular(rv) => {
            if has("corner_colors") {
                let l = RegularLabelling::from_json(text).map_err(load)?;
                ("labelling", strings(validate_regular_labelling(rv, &l)))
            } else if value.get("reduced") == Some(&json!(true)) {
                let rr = ReducedRegularDecomposition::from_json(text).map_err(load)?;
                ("reduced", strings(validate_reduced_regular(rv, &rr)))
            } else if has("dart_colors") {
                let r = RegularDecomposition::from_json(text).map_err(load)?;
                ("schnyder", strings(validate_regular_decomposition(rv, &r)))
            } else if has("coords") {
                let gd = GridDrawing::from_json(rv, text).map_err(load)?;
                let report = check_planarity(&gd);
                let found = report.crossings.iter().map(|(a, b)| format!("{a:?} meets {b:?}")).collect();
                ("drawing", found)
            } else {
                return Err(load(Error::Format("unrecognized structure file".into())));
            }
        }
    })
}

fn orient(a: &OrientArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let ang = angulation(&load_map(&a.map)?, a.d)?;
    let stage = Failure::domain("orient");
    let o = if a.even {
        let base = compute_p_p1_orientation(&ang).map_err(&stage)?;
        let base = if a.minimal { Lattice::new(&ang).minimum(&base) } else { base };
        base.doubled()
    } else {
        let base = compute_dd2_orientation(&ang).map_err(&stage)?;
        if a.minimal {
            Lattice::new(&ang).minimum(&base)
        } else {
            base
        }
    };
    emit(a.output.as_deref(), &o.to_json(), out)
}

fn convert(a: &ConvertArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let map = load_map(&a.map.path)?;
    let text = read(&a.input)?;
    let load = Failure::domain("load");
    let stage = Failure::domain("convert");
    let result = match view(&map, a.map.view, a.map.d, a.map.root)? {
        View::Angulation(ang) => {
            if (a.from, a.to) == (Form::Schnyder, Form::Orientation) {
                let s = SchnyderDecomposition::from_json(&text).map_err(load)?;
                return emit(a.output.as_deref(), &gamma(&ang, &s).to_json(), out);
            }
            let l = match a.from {
                Form::Orientation => psi_inverse(&ang, &FracOrientation::from_json(&text).map_err(&load)?),
                Form::Labelling => Ok(CornerLabelling::from_json(&text).map_err(&load)?),
                Form::Schnyder => phi_inverse(&ang, &SchnyderDecomposition::from_json(&text).map_err(&load)?),
                Form::Reduced => lambda_inverse(&ang, &ReducedSchnyderDecomposition::from_json(&text).map_err(&load)?)
                    .and_then(|s| phi_inverse(&ang, &s)),
            }
            .map_err(&stage)?;
            match a.to {
                Form::Orientation => psi(&ang, &l).map(|o| o.to_json()),
                Form::Labelling => Ok(l.to_json()),
                Form::Schnyder => phi(&ang, &l).map(|s| s.to_json()),
                Form::Reduced => phi(&ang, &l).and_then(|s| lambda(&ang, &s)).map(|r| r.to_json()),
            }
        }
        View::Regular(rv) => {
            let l = match a.from {
                Form::Orientation => Err(Error::Format("orientations live on angulations".into())),
                Form::Labelling => Ok(RegularLabelling::from_json(&text).map_err(&load)?),
                Form::Schnyder => xi_inverse(&rv, &RegularDecomposition::from_json(&text).map_err(&load)?),
                Form::Reduced => lambda_star_inverse(&rv, &ReducedRegularDecomposition::from_json(&text).map_err(&load)?)
                    .and_then(|r| xi_inverse(&rv, &r)),
            }
            .map_err(&stage)?;
            match a.to {
                Form::Orientation => Err(Error::Format("orientations live on angulations".into())),
                Form::Labelling => Ok(l.to_json()),
                Form::Schnyder => xi(&rv, &l).map(|r| r.to_json()),
                Form::Reduced => xi(&rv, &l).and_then(|r| lambda_star(&rv, &r)).map(|r| r.to_json()),
            }
        }
    };
    emit(a.output.as_deref(), &result.map_err(stage)?, out)
}

fn dualize(a: &DualizeArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let map = load_map(&a.map.map)?;
    let load = Failure::domain("load");
    let stage = Failure::domain("dualize");
    let (target, pair) = match view(&map, a.map.view, a.map.d, a.map.root)? {
        View::Angulation(ang) => {
            let pair = DualPair::from_angulation(&ang).map_err(&stage)?;
            (pair.dual.map.clone(), pair)
        }
        View::Regular(rv) => {
            let pair = DualPair::from_regular(&rv).map_err(&stage)?;
            (pair.primal.map.clone(), pair)
        }
    };
    if let (Some(path), Some(dest)) = (&a.structure, &a.structure_output) {
        let text = read(path)?;
        let is_labelling = serde_json::from_str::<Value>(&text).is_ok_and(|v| v.get("corner_colors").is_some());
        let moved = match (a.map.view, is_labelling) {
            (ViewKind::Angulation, true) => {
                dual_labelling(&pair, &CornerLabelling::from_json(&text).map_err(&load)?).map(|l| l.to_json())
            }
            (ViewKind::Angulation, false) => {
                chi(&pair, &SchnyderDecomposition::from_json(&text).map_err(&load)?).map(|r| r.to_json())
            }
            (ViewKind::Regular, true) => {
                primal_labelling(&pair, &RegularLabelling::from_json(&text).map_err(&load)?).map(|l| l.to_json())
            }
            (ViewKind::Regular, false) => {
                chi_inverse(&pair, &RegularDecomposition::from_json(&text).map_err(&load)?).map(|s| s.to_json())
            }
        }
        .map_err(&stage)?;
        emit(Some(dest), &moved, out)?;
    }
    emit(a.output.as_deref(), &target.to_json(), out)
}

fn lattice(a: &LatticeArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let ang = angulation(&load_map(&a.map)?, a.d)?;
    let stage = Failure::domain("lattice");
    let lat = Lattice::new(&ang);
    let start = if a.even { compute_p_p1_orientation(&ang) } else { compute_dd2_orientation(&ang) }.map_err(&stage)?;
    let min = lat.minimum(&start);
    let scale = |o: FracOrientation| if a.even { o.doubled() } else { o };
    let text = match a.action {
        LatticeAction::Min => scale(min).to_json(),
        LatticeAction::Count => lat.enumerate_from(&min, a.cap).map_err(&stage)?.len().to_string(),
        LatticeAction::Enumerate => {
            let all = lat.enumerate_from(&min, a.cap).map_err(&stage)?;
            all.into_iter().map(|o| scale(o).to_json()).collect::<Vec<_>>().join("\n")
        }
    };
    emit(a.output.as_deref(), &text, out)
}

fn draw_cmd(a: &DrawArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let map = load_map(&a.map)?;
    let rv = regular(&map, Some(4), a.root)?;
    let stage = Failure::domain("draw");
    let (_, r) = compute_even_regular_decomposition(&rv).map_err(&stage)?;
    let mut gd = draw(&rv, &r).map_err(&stage)?;
    if a.compact {
        let fc = classify_faces(&gd, &r).map_err(&stage)?;
        let rc = match a.split {
            Split::Balanced => balanced_reduction_choice(&fc),
            Split::Random => random_reduction_choice(&fc, &mut sample_rng(a.seed, 0)),
        };
        gd = apply_reduction(&gd, &rc).map_err(&stage)?;
    }
    let (text, svg, crossings) = match a.mode {
        DrawMode::Orthogonal => {
            if a.with_root {
                gd = add_root(&gd).map_err(&stage)?;
            }
            let svg = emit_svg(&gd, SvgStyle { grid: a.grid, straight: false });
            (gd.to_json(), svg, check_planarity(&gd).crossings.len())
        }
        DrawMode::Straightline => {
            if a.with_root {
                return Err(stage(Error::Format("the straight-line drawing leaves out the root".into())));
            }
            let sl = straight_line_drawing(&gd);
            let coords: std::collections::BTreeMap<usize, [i64; 2]> =
                sl.coords.iter().enumerate().filter_map(|(v, p)| p.map(|p| (v, [p.0, p.1]))).collect();
            let text = json!({"coords": coords, "segments": sl.segments}).to_string();
            let svg = emit_svg(&gd, SvgStyle { grid: a.grid, straight: true });
            (text, svg, check_straight_planarity(&sl).crossings.len())
        }
    };
    if crossings > 0 {
        return Err(Failure::invalid("draw", format!("{crossings} crossings")));
    }
    if let Some(p) = &a.svg {
        emit(Some(p), &svg, out)?;
    }
    if let Some(p) = &a.json {
        emit(Some(p), &text, out)?;
    }
    if a.svg.is_none() && a.json.is_none() {
        return emit(None, &text, out);
    }
    let placed: Vec<_> = gd.coords.iter().flatten().collect();
    let span = |f: fn(&&(i64, i64)) -> i64| placed.iter().map(f).max().unwrap_or(0) - placed.iter().map(f).min().unwrap_or(0);
    let summary = json!({
        "vertices": gd.n(),
        "width": span(|p| p.0),
        "height": span(|p| p.1),
        "bends": gd.bend_count(),
        "crossings": crossings,
    });
    emit(None, &summary.to_string(), out)
}

fn sample(a: &SampleArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let jobs = a.jobs.or_else(|| std::env::var("SCHNYDER_KIT_JOBS").ok()?.parse().ok()).unwrap_or(1);
    let stats = concentration_experiment(a.n, a.count, a.seed, a.max_attempts, jobs).map_err(Failure::domain("sample"))?;
    if let Some(p) = &a.csv {
        emit(Some(p), &stats.to_csv(), out)?;
    }
    if let Some(p) = &a.map_output {
        let s = crate::sampler::rejection_sample(a.n, &mut sample_rng(a.seed, 0), a.max_attempts)
            .map_err(Failure::domain("sample"))?;
        emit(Some(p), &s.pair.quad.map.to_json(), out)?;
    }
    emit(a.report.as_deref(), &stats.to_json(), out)
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn std::io::Write) -> Outcome<()> {
    let stage = Failure::domain("enumerate");
    let pairs = enumerate_pairs(a.n, a.cap).map_err(&stage)?;
    let mut lines = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let triple = encode(&pair.quad, &pair.schnyder).map_err(&stage)?;
        let parse = |s: String| serde_json::from_str::<Value>(&s).expect("own output parses");
        lines.push(
            json!({
                "triple": parse(triple.to_json()),
                "map": parse(pair.quad.map.to_json()),
                "schnyder": parse(pair.schnyder.to_json()),
            })
            .to_string(),
        );
    }
    emit(a.output.as_deref(), &lines.join("\n"), out)
}
