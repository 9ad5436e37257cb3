mod wire;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use polycyclic::codes::{self, Ambient, Code, DualityReport};
use polycyclic::factor;
use polycyclic::isometry::{self, IsometryKind};
use polycyclic::serial::{self, BivAmbient};
use polycyclic::transform::{self, ZMod};
use polycyclic::{AmbientSpace, DualForm, MsTransform, PolyAmbient, RingSpec, Spectrum};
use serde_json::{json, Map, Value};

use wire::{Render, RingArg};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Malformed(String),
    Math(polycyclic::Error),
    Io(String),
}

impl From<polycyclic::Error> for CliError {
    fn from(e: polycyclic::Error) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Malformed(_) => 65,
            CliError::Math(e) if e.is_precondition() => 2,
            CliError::Math(_) => 3,
            CliError::Io(_) => 74,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Malformed(m) | CliError::Io(m) => m.clone(),
            CliError::Math(e) => e.to_string(),
        }
    }
}

/// Polycyclic and serial codes over Galois rings.
#[derive(Parser)]
#[command(name = "polycyclic", version)]
struct Cli {
    /// Seed for the randomized factorization.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Render polynomials and ring elements as text.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct RingPoly {
    /// Ring spec, e.g. {"p":2,"r":2,"m":1}.
    #[arg(long)]
    ring: String,
    /// Monic modulus f, ascending coefficients.
    #[arg(long = "poly", visible_alias = "f")]
    poly: String,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    rp: RingPoly,
    /// Generators, a list of coefficient vectors.
    #[arg(long)]
    gens: String,
}

#[derive(Args)]
struct BivArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    f1: String,
    #[arg(long)]
    f2: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hensel-lifted factorization of f.
    Factor(RingPoly),
    /// Primitive idempotents of R[x]/<f>.
    Idempotents(RingPoly),
    /// Splitting extension and ordered roots of f.
    Split(RingPoly),
    /// Mattson-Solomon transform of g.
    Ms {
        #[command(flatten)]
        rp: RingPoly,
        #[arg(long)]
        g: String,
    },
    /// Inverse transform of a spectrum.
    MsInv {
        #[command(flatten)]
        rp: RingPoly,
        #[arg(long)]
        spectrum: String,
    },
    /// Whether the DFT of length n with root xi is invertible.
    DftCheck {
        /// Ring spec, or {"modulusZ": M} for Z_M.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        xi: String,
        #[arg(long)]
        n: u64,
    },
    /// Canonical basis of the ideal generated by the given vectors.
    Code(CodeArgs),
    /// Annihilator of a code.
    Ann(CodeArgs),
    /// Dual of a code with respect to one form.
    Dual {
        #[command(flatten)]
        code: CodeArgs,
        /// trace, star, zero or ms.
        #[arg(long, default_value = "trace")]
        form: String,
    },
    /// Every dual next to the annihilator.
    DualityReport(CodeArgs),
    /// Conductor exponents over the idempotent components.
    Decompose(CodeArgs),
    /// Minimum Hamming distance by enumeration.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Isomorphism theta: x -> omega and its source modulus h.
    Theta {
        #[command(flatten)]
        rp: RingPoly,
        #[arg(long)]
        omega: String,
    },
    /// Whether theta is a Hamming isometry.
    IsometryClassify {
        #[command(flatten)]
        rp: RingPoly,
        #[arg(long)]
        omega: String,
    },
    /// Equivalence of x^n - lambda with x^n - 1.
    ConstacyclicEquiv {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Bivariate transform of k, or its inverse with --spectrum.
    SerialMs {
        #[command(flatten)]
        biv: BivArgs,
        #[arg(long, conflicts_with = "spectrum", required_unless_present = "spectrum")]
        k: Option<String>,
        #[arg(long)]
        spectrum: Option<String>,
    },
    /// Tensor grid of idempotents.
    SerialIdem(BivArgs),
    /// Duals and decomposition of a serial code.
    SerialDual {
        #[command(flatten)]
        biv: BivArgs,
        #[arg(long)]
        gens: String,
    },
    /// Coordinatewise isometry of a serial ambient.
    SerialIso {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        f1: String,
        #[arg(long)]
        omega1: String,
        #[arg(long)]
        f2: String,
        #[arg(long)]
        omega2: String,
    },
}

fn ambient(rp: &RingPoly) -> Result<(RingSpec, AmbientSpace), CliError> {
    let ring = wire::ring(&rp.ring)?;
    let f = wire::poly(&ring, &rp.poly, "--poly")?;
    let amb = AmbientSpace::new(&ring, f)?;
    Ok((ring, amb))
}

fn transform_of(rp: &RingPoly, seed: u64) -> Result<MsTransform, CliError> {
    let (ring, amb) = ambient(rp)?;
    Ok(MsTransform::new(&ring, amb.f(), seed)?)
}

fn code_of(args: &CodeArgs, seed: u64) -> Result<(PolyAmbient, Code), CliError> {
    let (ring, amb) = ambient(&args.rp)?;
    let pa = PolyAmbient::new(&ring, amb.f(), seed)?;
    let gens = wire::vectors(&ring, &args.gens, "--gens")?;
    let code = codes::code_from_generators(&pa, &gens)?;
    Ok((pa, code))
}

fn biv_of(args: &BivArgs, seed: u64) -> Result<(RingSpec, BivAmbient), CliError> {
    let ring = wire::ring(&args.ring)?;
    let f1 = wire::poly(&ring, &args.f1, "--f1")?;
    let f2 = wire::poly(&ring, &args.f2, "--f2")?;
    let amb = BivAmbient::new(&ring, &f1, &f2, seed)?;
    Ok((ring, amb))
}

fn code_json(out: &Render, code: &Code) -> Value {
    json!({ "basis": out.basis(code.basis()), "size": code.size().map(|s| s.to_string()) })
}

fn duality_json(out: &Render, rep: &DualityReport) -> Value {
    let mut duals = Map::new();
    for (form, c) in &rep.duals {
        duals.insert(form.name().into(), out.basis(c.basis()));
    }
    json!({
        "annihilator": out.basis(rep.annihilator.basis()),
        "duals": duals,
        "all_equal": rep.all_equal(),
    })
}

fn decomposition_json(d: &codes::Decomposition) -> Value {
    json!({
        "conductors": d.conductors,
        "free": d.is_free(),
        "full_components": d.full_components(),
        "absent_components": d.absent_components(),
    })
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    let out = Render { pretty: cli.pretty };
    let seed = cli.seed;
    Ok(match &cli.cmd {
        Cmd::Factor(rp) => {
            let (ring, amb) = ambient(rp)?;
            let fact = factor::factorize(&ring, amb.f(), seed)?;
            let field = ring.residue_field();
            json!({
                "f": out.poly(&ring, amb.f().coeffs()),
                "factors": fact.factors.iter().map(|g| out.poly(&ring, g.coeffs())).collect::<Vec<_>>(),
                "residue_factors": fact.residue_factors.iter().map(|g| out.poly(&field, g.coeffs())).collect::<Vec<_>>(),
            })
        }
        Cmd::Idempotents(rp) => {
            let t = transform_of(rp, seed)?;
            let ring = t.ambient().ring();
            json!({
                "idempotents": t.idempotents().iter().map(|e| out.poly(ring, e.coeffs())).collect::<Vec<_>>(),
                "factors": t.analysis().factorization.factors.iter().map(|g| out.poly(ring, g.coeffs())).collect::<Vec<_>>(),
            })
        }
        Cmd::Split(rp) => {
            let t = transform_of(rp, seed)?;
            let s = t.splitting();
            let mut v = json!({
                "extension": out.ring(&s.extension),
                "roots": out.elems(&s.extension, &s.roots),
                "root_factor": s.root_factor,
            });
            if t.ambient().ring().m() > 1 {
                v["generator_image"] = out.elem(&s.extension, s.embedding.image_of_generator());
            }
            v
        }
        Cmd::Ms { rp, g } => {
            let t = transform_of(rp, seed)?;
            let g = t.ambient().element(wire::vector(t.ambient().ring(), g, "--g")?)?;
            let s = t.ms(&g)?;
            json!({
                "extension": out.ring(t.extension()),
                "roots": out.elems(t.extension(), &t.splitting().roots),
                "spectrum": out.elems(t.extension(), &s.values),
            })
        }
        Cmd::MsInv { rp, spectrum } => {
            let t = transform_of(rp, seed)?;
            let b = Spectrum { values: wire::vector(t.extension(), spectrum, "--spectrum")? };
            let g = t.ms_inverse(&b)?;
            json!({ "g": out.poly(t.ambient().ring(), g.coeffs()) })
        }
        Cmd::DftCheck { ring, xi, n } => {
            let xi_v = wire::parse(xi, "--xi")?;
            match wire::ring_arg(ring)? {
                RingArg::Modular(m) => {
                    let z = ZMod::new(m)?;
                    let x = xi_v
                        .as_u64()
                        .ok_or_else(|| CliError::Malformed("--xi: expected a non-negative integer".into()))?;
                    let rep = transform::dft_invertible(&z, &(x % m), *n)?;
                    json!({
                        "invertible": rep.invertible,
                        "witness": rep.witness.map(|(k, w)| json!({ "k": k, "value": w })),
                    })
                }
                RingArg::Galois(r) => {
                    let x = wire::elem(&r, &xi_v)?;
                    let rep = transform::dft_invertible(&r, &x, *n)?;
                    json!({
                        "invertible": rep.invertible,
                        "witness": rep.witness.map(|(k, w)| json!({ "k": k, "value": out.elem(&r, &w) })),
                    })
                }
            }
        }
        Cmd::Code(args) => {
            let (pa, code) = code_of(args, seed)?;
            let mut v = code_json(&out, &code);
            v["is_ideal"] = json!(codes::is_ideal(&pa, &code));
            v
        }
        Cmd::Ann(args) => {
            let (pa, code) = code_of(args, seed)?;
            code_json(&out, &codes::annihilator(&pa, &code)?)
        }
        Cmd::Dual { code, form } => {
            let f = DualForm::parse(form).ok_or_else(|| {
                CliError::Malformed(format!("--form: unknown form {form:?}; use trace, star, zero or ms"))
            })?;
            let (pa, c) = code_of(code, seed)?;
            let mut v = code_json(&out, &codes::dual(&pa, &c, f)?);
            v["form"] = json!(f.name());
            v
        }
        Cmd::DualityReport(args) => {
            let (pa, code) = code_of(args, seed)?;
            let mut v = duality_json(&out, &codes::check_duality(&pa, &code)?);
            v["zero_form_nondegenerate"] = json!(pa.zero_form_nondegenerate());
            v
        }
        Cmd::Decompose(args) => {
            let (pa, code) = code_of(args, seed)?;
            decomposition_json(&codes::decompose(&pa, &code)?)
        }
        Cmd::Mindist { code, budget } => {
            let (_, c) = code_of(code, seed)?;
            let d = codes::min_distance_with_budget(&c, budget.unwrap_or(codes::MIN_DISTANCE_BUDGET))?;
            json!({ "distance": d.distance, "empty": d.empty })
        }
        Cmd::Theta { rp, omega } => {
            let (ring, amb) = ambient(rp)?;
            let omega = amb.element(wire::vector(&ring, omega, "--omega")?)?;
            let v = isometry::classify_monomial(&amb, &omega)?;
            let wit = v.witness.as_ref().ok_or(polycyclic::Error::Singular)?;
            json!({
                "h": out.poly(&ring, wit.h.coeffs()),
                "det_w": out.elem(&ring, &wit.det_w),
                "w": out.matrix(&wit.w),
                "isometric": v.is_isometric(),
            })
        }
        Cmd::IsometryClassify { rp, omega } => {
            let (ring, amb) = ambient(rp)?;
            let omega = amb.element(wire::vector(&ring, omega, "--omega")?)?;
            let v = isometry::classify_monomial(&amb, &omega)?;
            let mut o = json!({
                "predicted_isometric": v.predicted_isometric,
                "criterion_agrees": v.criterion_agrees(),
            });
            match &v.kind {
                IsometryKind::Isometric { target_h, monomial } => {
                    o["kind"] = json!("isometric");
                    o["target_h"] = out.poly(&ring, target_h.coeffs());
                    o["permutation"] = json!(monomial.permutation);
                    o["units"] = out.elems(&ring, &monomial.units);
                }
                IsometryKind::IsomorphicNotMonomial { counterexample: c } => {
                    o["kind"] = json!("isomorphic-not-monomial");
                    o["h"] = out.poly(&ring, v.witness.as_ref().unwrap().h.coeffs());
                    o["counterexample"] = json!({
                        "codeword": out.poly(&ring, &c.codeword),
                        "image": out.poly(&ring, &c.image),
                        "weight_before": c.weight_before,
                        "weight_after": c.weight_after,
                    });
                }
                IsometryKind::NotApplicable => o["kind"] = json!("not-applicable"),
            }
            o
        }
        Cmd::ConstacyclicEquiv { ring, lambda, n } => {
            let ring = wire::ring(ring)?;
            let lambda = wire::elem(&ring, &wire::parse(lambda, "--lambda")?)?;
            match isometry::constacyclic_to_cyclic(&ring, &lambda, *n)? {
                Some(wit) => json!({
                    "equivalent": true,
                    "omega": out.poly(&ring, wit.omega.coeffs()),
                    "h": out.poly(&ring, wit.h.coeffs()),
                }),
                None => json!({ "equivalent": false }),
            }
        }
        Cmd::SerialMs { biv, k, spectrum } => {
            let (ring, amb) = biv_of(biv, seed)?;
            let ext = amb.extension();
            match (k, spectrum) {
                (Some(k), _) => {
                    let s = amb.ms(&wire::vector(&ring, k, "--k")?)?;
                    json!({ "extension": out.ring(ext), "spectrum": out.elems(ext, &s.values) })
                }
                (None, Some(s)) => {
                    let b = Spectrum { values: wire::vector(ext, s, "--spectrum")? };
                    json!({ "k": out.elems(&ring, &amb.ms_inverse(&b)?) })
                }
                (None, None) => return Err(CliError::Usage("give --k or --spectrum".into())),
            }
        }
        Cmd::SerialIdem(biv) => {
            let (ring, amb) = biv_of(biv, seed)?;
            let es = amb.idempotents();
            json!({
                "idempotents": es.iter().map(|e| out.elems(&ring, e)).collect::<Vec<_>>(),
                "grid": (0..es.len()).map(|i| amb.grid_index(i)).collect::<Vec<_>>(),
                "non_local_components": amb.non_local_components(),
            })
        }
        Cmd::SerialDual { biv, gens } => {
            let (ring, amb) = biv_of(biv, seed)?;
            let gens = wire::vectors(&ring, gens, "--gens")?;
            let code = codes::code_from_generators(&amb, &gens)?;
            let mut v = duality_json(&out, &serial::biv_duality(&amb, &code)?);
            v["decomposition"] = match serial::biv_decompose(&amb, &code) {
                Ok(d) => decomposition_json(&d),
                Err(e) => json!({ "error": e.to_string() }),
            };
            v
        }
        Cmd::SerialIso { ring, f1, omega1, f2, omega2 } => {
            let ring = wire::ring(ring)?;
            let a1 = AmbientSpace::new(&ring, wire::poly(&ring, f1, "--f1")?)?;
            let a2 = AmbientSpace::new(&ring, wire::poly(&ring, f2, "--f2")?)?;
            let w1 = a1.element(wire::vector(&ring, omega1, "--omega1")?)?;
            let w2 = a2.element(wire::vector(&ring, omega2, "--omega2")?)?;
            let iso = serial::serial_isometry(&a1, &w1, &a2, &w2)?;
            json!({
                "case": iso.case.number(),
                "h1": out.poly(&ring, iso.h1.coeffs()),
                "h2": out.poly(&ring, iso.h2.coeffs()),
            })
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 64,
                _ => 65,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|v| {
        let text = if cli.pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) }
            .expect("JSON values serialize");
        match &cli.output {
            Some(path) => std::fs::write(path, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                println!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
