//! Python bindings for the `lpres` crate: parse the text formats, expand
//! and verify L-presentations, derive kernel presentations, and emit HNN
//! embeddings, all through two small wrapper classes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lpres::oracles::abelian::AbelianOracle;
use lpres::oracles::{dyadic, grig};
use lpres::presfmt;
use lpres::{derive_lpres, expand, hnn_embed, verify_lpres, DedupMode, Error, Generator};

fn to_py(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn dedup_mode(cyclic: bool) -> DedupMode {
    if cyclic {
        DedupMode::Cyclic
    } else {
        DedupMode::Exact
    }
}

/// A finite presentation read from a `[group]` document.
#[pyclass(name = "Presentation", module = "pylpres")]
struct Presentation {
    inner: lpres::FinitePresentation,
}

#[pymethods]
impl Presentation {
    /// Parse a `[group]` document.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Presentation {
            inner: presfmt::parse_presentation(text).map_err(to_py)?,
        })
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(|g| g.to_string()).collect()
    }

    #[getter]
    fn relators(&self) -> Vec<String> {
        self.inner.relators().iter().map(presfmt::print_word).collect()
    }

    /// Derive an ascending L-presentation for the kernel of the degree
    /// map, rewriting along generator `t` with a `[certs]` document.
    #[pyo3(signature = (t, certs, n=None))]
    fn derive(&self, t: &str, certs: &str, n: Option<i64>) -> PyResult<LPresentation> {
        if !lpres::freegroup::is_valid_name(t) {
            return Err(PyValueError::new_err(format!("invalid generator name {t:?}")));
        }
        let certs = presfmt::parse_certs(certs).map_err(to_py)?;
        let derived =
            derive_lpres(&self.inner, &Generator::plain(t), &certs, n).map_err(to_py)?;
        Ok(LPresentation {
            inner: derived.lp,
        })
    }

    fn __str__(&self) -> String {
        presfmt::print_presentation(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "<Presentation: {} generators, {} relators>",
            self.inner.generators().len(),
            self.inner.relators().len()
        )
    }
}

/// A finite endomorphic presentation read from an `[lpres]` document.
#[pyclass(name = "LPresentation", module = "pylpres")]
struct LPresentation {
    inner: lpres::LPresentation,
}

#[pymethods]
impl LPresentation {
    /// Parse an `[lpres]` document.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(LPresentation {
            inner: presfmt::parse_lpres(text).map_err(to_py)?,
        })
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(|g| g.to_string()).collect()
    }

    #[getter]
    fn seeds(&self) -> Vec<String> {
        self.inner.seeds().iter().map(presfmt::print_word).collect()
    }

    #[getter]
    fn fixed(&self) -> Vec<String> {
        self.inner.fixed().iter().map(presfmt::print_word).collect()
    }

    #[getter]
    fn endo_names(&self) -> Vec<String> {
        self.inner.endos().iter().map(|(n, _)| n.clone()).collect()
    }

    #[getter]
    fn ascending(&self) -> bool {
        self.inner.is_ascending()
    }

    /// All relators up to the given endomorphism-composition depth, as
    /// canonical strings in deterministic order.
    #[pyo3(signature = (depth, cyclic=false))]
    fn expand(&self, depth: usize, cyclic: bool) -> Vec<String> {
        expand(&self.inner, depth, dedup_mode(cyclic))
            .relators()
            .map(presfmt::print_word)
            .collect()
    }

    /// Expand to `depth` and evaluate every relator with the named oracle
    /// (`"grigorchuk"`, `"dyadic"`, or `"abelian"`), optionally after a
    /// `[map]` pullback.  Returns the verification report text; the first
    /// line is `OK <n>` when everything checked out.
    #[pyo3(signature = (depth, oracle, pullback=None, jobs=1))]
    fn verify(
        &self,
        depth: usize,
        oracle: &str,
        pullback: Option<&str>,
        jobs: usize,
    ) -> PyResult<String> {
        let map = match pullback {
            Some(text) => Some(presfmt::parse_map(text).map_err(to_py)?),
            None => None,
        };
        let report = match oracle {
            "grigorchuk" => {
                verify_lpres(&self.inner, depth, grig::check, map.as_ref(), jobs).map_err(to_py)?
            }
            "dyadic" => {
                let images = dyadic::bs12sq_images();
                verify_lpres(
                    &self.inner,
                    depth,
                    |w| dyadic::check(w, &images),
                    map.as_ref(),
                    jobs,
                )
                .map_err(to_py)?
            }
            "abelian" => {
                if map.is_some() {
                    return Err(to_py(Error::PullbackUnsupported("abelian".into())));
                }
                let ab = AbelianOracle::for_presentation(&self.inner).map_err(to_py)?;
                verify_lpres(&self.inner, depth, |w| ab.check(w), None, jobs).map_err(to_py)?
            }
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown oracle {other:?}; expected grigorchuk, dyadic, or abelian"
                )))
            }
        };
        Ok(report.render())
    }

    /// Embed an ascending L-presentation into a finitely presented group,
    /// one stable letter per endomorphism.
    fn hnn(&self) -> PyResult<Presentation> {
        Ok(Presentation {
            inner: hnn_embed(&self.inner).map_err(to_py)?,
        })
    }

    fn __str__(&self) -> String {
        presfmt::print_lpres(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "<LPresentation: {} generators, {} fixed, {} seeds, {} endomorphisms>",
            self.inner.generators().len(),
            self.inner.fixed().len(),
            self.inner.seeds().len(),
            self.inner.endos().len()
        )
    }
}

/// Reduce a word over the given generators and return its canonical form.
#[pyfunction]
fn reduce_word(text: &str, generators: Vec<String>) -> PyResult<String> {
    let mut alphabet = Vec::with_capacity(generators.len());
    for n in &generators {
        if !lpres::freegroup::is_valid_name(n) {
            return Err(PyValueError::new_err(format!("invalid generator name {n:?}")));
        }
        alphabet.push(Generator::plain(n.clone()));
    }
    let w = presfmt::parse_word(text, &alphabet).map_err(to_py)?;
    Ok(presfmt::print_word(&w))
}

/// The input files of a named demo (`"z2"`, `"lysenok"`, `"remark3"`), as
/// `(file name, content)` pairs.
#[pyfunction]
fn demo_files(name: &str) -> PyResult<Vec<(String, String)>> {
    lpres::fixtures::demo_files(name)
        .map(|files| {
            files
                .into_iter()
                .map(|(f, c)| (f.to_string(), c.to_string()))
                .collect()
        })
        .ok_or_else(|| {
            PyValueError::new_err(format!(
                "unknown demo {name:?}; expected one of {:?}",
                lpres::fixtures::DEMO_NAMES
            ))
        })
}

#[pymodule]
fn pylpres(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Presentation>()?;
    m.add_class::<LPresentation>()?;
    m.add_function(wrap_pyfunction!(reduce_word, m)?)?;
    m.add_function(wrap_pyfunction!(demo_files, m)?)?;
    Ok(())
}
