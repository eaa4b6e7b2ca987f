//! Command-line surface for the Beltrami-Klein disk kernel: compute
//! distances and angles, sample curve families, convert between models,
//! render scene files to SVG, and run the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 validation or parse
//! error, 3 numerical non-convergence.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use beltrami::area::{triangle_area_defect, Triangle};
use beltrami::curves::{circle_locus, equidistant_point, horocycle_coords, horocycle_locus};
use beltrami::disk::IdealPoint;
use beltrami::geodesy::{chord_through, distance};
use beltrami::hyperboloid::{lift_to_hyperboloid, project_to_disk, HyperboloidPoint};
use beltrami::render::render_svg;
use beltrami::scene::parse_scene;
use beltrami::{angles, cartesian_to_polar, curves, geodesy, verify, Error, ModelParams};

#[derive(Parser)]
#[command(
    name = "beltrami",
    version,
    about = "Beltrami-Klein disk model calculator"
)]
struct Cli {
    /// Euclidean disk radius a
    #[arg(long, global = true, env = "BELTRAMI_A", default_value_t = 1.0)]
    a: f64,

    /// Curvature scale R (the surface has Gaussian curvature -1/R^2)
    #[arg(long = "R", global = true, env = "BELTRAMI_R", default_value_t = 1.0)]
    r: f64,

    /// Emit JSON where supported (curve output)
    #[arg(long, global = true)]
    json: bool,

    /// Scale every verification tolerance by this factor
    #[arg(long, global = true, default_value_t = 1.0)]
    tol_scale: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hyperbolic distance between two interior points
    Dist {
        /// First point as u,v
        #[arg(long, value_parser = parse_pair)]
        p: Pair,
        /// Second point as u,v
        #[arg(long, value_parser = parse_pair)]
        q: Pair,
    },
    /// True hyperbolic angle at a point between chords of inclinations mu, nu
    Angle {
        /// Point as u,v
        #[arg(long, value_parser = parse_pair)]
        p: Pair,
        /// Inclination of the first chord (radians)
        #[arg(long)]
        mu: f64,
        /// Inclination of the second chord (radians)
        #[arg(long)]
        nu: f64,
    },
    /// Angle of parallelism for a perpendicular of hyperbolic length rho
    Parallelism {
        #[arg(long)]
        rho: f64,
    },
    /// Interior angles and area of the triangle with the given vertices
    Triangle {
        /// Vertex as u,v (repeat three times)
        #[arg(long = "v", value_parser = parse_pair, action = clap::ArgAction::Append)]
        vertices: Vec<Pair>,
    },
    /// Convert a point between coordinate systems
    Convert {
        #[arg(long)]
        to: ConvertTarget,
        /// Disk point as u,v (for every target except `disk`)
        #[arg(long, value_parser = parse_pair)]
        p: Option<Pair>,
        /// Hyperboloid point as x,y,z (for target `disk`)
        #[arg(long, value_parser = parse_triple)]
        h: Option<Triple>,
        /// Ideal centre angle for horocyclic coordinates (radians)
        #[arg(long, default_value_t = 0.0)]
        ideal: f64,
    },
    /// Sample points of a curve family, one "u v" pair per line
    Curve {
        #[command(subcommand)]
        family: CurveFamily,
    },
    /// Render a scene JSON file to SVG
    Render {
        /// Input scene (JSON)
        scene: PathBuf,
        /// Output file (SVG)
        out: PathBuf,
    },
    /// Run the verification suite and report one line per check
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Disk,
    Hyperboloid,
    Polar,
    Equidistant,
    Horocyclic,
}

#[derive(Subcommand)]
enum CurveFamily {
    /// Geodesic circle around an interior centre
    Circle {
        /// Centre as u,v
        #[arg(long, value_parser = parse_pair)]
        center: Pair,
        /// Hyperbolic radius
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        n: usize,
    },
    /// Equidistant curve at perpendicular offset xi from the diameter v = 0
    Equidistant {
        #[arg(long)]
        xi: f64,
        #[arg(long)]
        n: usize,
    },
    /// Horocycle with ideal centre at the given boundary angle
    Horocycle {
        /// Boundary angle of the ideal centre (radians)
        #[arg(long)]
        ideal: f64,
        /// Offset from the reference horocycle through the origin
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        n: usize,
    },
    /// Chord through two interior points, sampled between its ideal endpoints
    Geodesic {
        #[arg(long, value_parser = parse_pair)]
        p: Pair,
        #[arg(long, value_parser = parse_pair)]
        q: Pair,
        #[arg(long)]
        n: usize,
    },
}

type Pair = (f64, f64);
type Triple = (f64, f64, f64);

fn parse_pair(s: &str) -> Result<Pair, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected u,v".into());
    }
    let u: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| "expected a number".to_string())?;
    let v: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| "expected a number".to_string())?;
    Ok((u, v))
}

fn parse_triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected x,y,z".into());
    }
    let mut vals = [0.0f64; 3];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| "expected a number".to_string())?;
    }
    Ok((vals[0], vals[1], vals[2]))
}

/// Fixed 12-decimal output; all documented example values use this format.
/// Values below half the last printed digit collapse to a signless zero.
fn fmt12(x: f64) -> String {
    let x = if x.abs() < 0.5e-12 { 0.0 } else { x };
    format!("{x:.12}")
}

enum CliError {
    Geometry(Error),
    Message(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Geometry(e)
    }
}

impl CliError {
    fn message(&self) -> String {
        match self {
            CliError::Geometry(e) => e.to_string(),
            CliError::Message(m) => m.clone(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Geometry(Error::NoConvergence) => 3,
            _ => 2,
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let params = ModelParams::new(cli.a, cli.r)?;
    match &cli.command {
        Command::Dist { p, q } => {
            let p = params.disk_point(p.0, p.1)?;
            let q = params.disk_point(q.0, q.1)?;
            println!("{}", fmt12(distance(&p, &q, &params)?));
        }
        Command::Angle { p, mu, nu } => {
            let p = params.disk_point(p.0, p.1)?;
            println!("{}", fmt12(angles::chord_angle_map(&p, *mu, *nu, &params)?));
        }
        Command::Parallelism { rho } => {
            println!("{}", fmt12(angles::angle_of_parallelism(*rho, &params)?));
        }
        Command::Triangle { vertices } => {
            if vertices.len() != 3 {
                return Err(CliError::Message(format!(
                    "triangle needs exactly three --v vertices, got {}",
                    vertices.len()
                )));
            }
            let pts = [
                params.disk_point(vertices[0].0, vertices[0].1)?,
                params.disk_point(vertices[1].0, vertices[1].1)?,
                params.disk_point(vertices[2].0, vertices[2].1)?,
            ];
            let tri = Triangle::interior(pts[0], pts[1], pts[2], &params)?;
            let mut measured = tri.angles(&params)?;
            // report in input vertex order (construction normalizes to CCW)
            let signed = (pts[1].u() - pts[0].u()) * (pts[2].v() - pts[0].v())
                - (pts[2].u() - pts[0].u()) * (pts[1].v() - pts[0].v());
            if signed < 0.0 {
                measured.swap(1, 2);
            }
            for angle in measured {
                println!("angle {}", fmt12(angle));
            }
            let area = triangle_area_defect(measured[0], measured[1], measured[2], &params)?;
            println!("area {}", fmt12(area));
        }
        Command::Convert { to, p, h, ideal } => {
            let need_p = || -> Result<beltrami::DiskPoint, CliError> {
                let (u, v) =
                    p.ok_or_else(|| CliError::Message("this target needs --p u,v".into()))?;
                Ok(params.disk_point(u, v)?)
            };
            match to {
                ConvertTarget::Hyperboloid => {
                    let hp = lift_to_hyperboloid(&need_p()?, &params)?;
                    println!("{} {} {}", fmt12(hp.x()), fmt12(hp.y()), fmt12(hp.z()));
                }
                ConvertTarget::Disk => {
                    let (x, y, z) =
                        h.ok_or_else(|| CliError::Message("target `disk` needs --h x,y,z".into()))?;
                    let hp = HyperboloidPoint::new(x, y, z, &params)?;
                    let p = project_to_disk(&hp, &params);
                    println!("{} {}", fmt12(p.u()), fmt12(p.v()));
                }
                ConvertTarget::Polar => {
                    let p = need_p()?;
                    let polar = cartesian_to_polar(&p);
                    let hyper = geodesy::to_hyperbolic_polar(&p, &params)?;
                    println!(
                        "{} {} {}",
                        fmt12(polar.r),
                        fmt12(polar.phi),
                        fmt12(hyper.rho)
                    );
                }
                ConvertTarget::Equidistant => {
                    let (xi, eta) = curves::equidistant_coords(&need_p()?, &params)?;
                    println!("{} {}", fmt12(xi), fmt12(eta));
                }
                ConvertTarget::Horocyclic => {
                    let center = IdealPoint::new(*ideal);
                    let (rho, sigma) = horocycle_coords(&need_p()?, &center, &params)?;
                    println!("{} {}", fmt12(rho), fmt12(sigma));
                }
            }
        }
        Command::Curve { family } => {
            let points: Vec<(f64, f64)> = match family {
                CurveFamily::Circle { center, rho, n } => {
                    require_n(*n)?;
                    let c = params.disk_point(center.0, center.1)?;
                    circle_locus(&c, *rho, *n, &params)?
                        .iter()
                        .map(|p| p.coords())
                        .collect()
                }
                CurveFamily::Equidistant { xi, n } => {
                    require_n(*n)?;
                    let span = 5.0 * params.r;
                    (0..*n)
                        .map(|k| {
                            let eta = -span + 2.0 * span * k as f64 / (*n - 1) as f64;
                            equidistant_point(eta, *xi, &params).coords()
                        })
                        .collect()
                }
                CurveFamily::Horocycle { ideal, rho, n } => {
                    require_n(*n)?;
                    horocycle_locus(&IdealPoint::new(*ideal), *rho, *n, &params)
                        .iter()
                        .map(|p| p.coords())
                        .collect()
                }
                CurveFamily::Geodesic { p, q, n } => {
                    if *n < 2 {
                        return Err(CliError::Message("curve sampling needs n >= 2".into()));
                    }
                    let p = params.disk_point(p.0, p.1)?;
                    let q = params.disk_point(q.0, q.1)?;
                    let [e0, e1] = chord_through(&p, &q, &params)?.endpoints();
                    let (x0, y0) = e0.coords(&params);
                    let (x1, y1) = e1.coords(&params);
                    (0..*n)
                        .map(|k| {
                            let t = k as f64 / (*n - 1) as f64;
                            (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
                        })
                        .collect()
                }
            };
            if cli.json {
                let rows: Vec<String> = points.iter().map(|(u, v)| format!("[{u},{v}]")).collect();
                println!("[{}]", rows.join(","));
            } else {
                for (u, v) in points {
                    println!("{} {}", fmt12(u), fmt12(v));
                }
            }
        }
        Command::Render { scene, out } => {
            let text = std::fs::read_to_string(scene)
                .map_err(|e| CliError::Message(format!("cannot read {}: {e}", scene.display())))?;
            let parsed = parse_scene(&text).map_err(|e| CliError::Message(e.to_string()))?;
            let svg = render_svg(&parsed)?;
            std::fs::write(out, svg)
                .map_err(|e| CliError::Message(format!("cannot write {}: {e}", out.display())))?;
        }
        Command::Verify => {
            let report = verify::run_all(cli.tol_scale);
            print!("{report}");
            return Ok(if report.all_passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn require_n(n: usize) -> Result<(), CliError> {
    if n < 3 {
        Err(CliError::Message("curve sampling needs n >= 3".into()))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
