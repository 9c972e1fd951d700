//! Python bindings for `varwreath`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use varwreath::oracle::{self, DEFAULT_BUDGET};
use varwreath::{AbelianGroupSpec, DecisionInput, Error, PassiveGroupSpec, Verdict};

create_exception!(_varwreath, VarwreathError, PyValueError);
create_exception!(_varwreath, ParseError, VarwreathError);
create_exception!(_varwreath, BudgetExceededError, VarwreathError);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Syntax { .. } | Error::InvalidCardinal(_) => ParseError::new_err(err.to_string()),
        Error::BudgetExceeded { .. } => BudgetExceededError::new_err(err.to_string()),
        other => VarwreathError::new_err(other.to_string()),
    }
}

/// A countable abelian group of finite exponent, e.g. `"C_4 x C_2^2"`.
#[pyclass(
    name = "AbelianGroup",
    module = "varwreath",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyAbelianGroup {
    inner: AbelianGroupSpec,
}

impl From<AbelianGroupSpec> for PyAbelianGroup {
    fn from(inner: AbelianGroupSpec) -> Self {
        PyAbelianGroup { inner }
    }
}

#[pymethods]
impl PyAbelianGroup {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        varwreath::parse_abelian(expr)
            .map(Self::from)
            .map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AbelianGroup('{}')", self.inner)
    }

    /// `(p, u, multiplicity)` per primary factor; infinite multiplicities
    /// appear as `"aleph_k"`.
    #[getter]
    fn factors(&self) -> Vec<(u64, u32, String)> {
        self.inner
            .factors()
            .iter()
            .map(|f| (f.p, f.u, f.mult.to_string()))
            .collect()
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    #[getter]
    fn is_trivial(&self) -> bool {
        self.inner.is_trivial()
    }

    #[getter]
    fn exponent(&self) -> PyResult<u64> {
        self.inner.exponent().map_err(to_py)
    }

    #[getter]
    fn primes(&self) -> Vec<u64> {
        self.inner.primes()
    }

    fn p_component(&self, p: u64) -> Self {
        self.inner.p_component(p).into()
    }

    /// Subgroup of `k`-th powers.
    fn power(&self, k: u64) -> Self {
        self.inner.power(k).into()
    }

    /// Whether all primary components are equivalent.
    fn equivalent(&self, other: &Self) -> bool {
        self.inner.equivalent(&other.inner)
    }

    /// `(t, w)` where the `p`-components stop coinciding, or `None`.
    fn divergence(&self, other: &Self, p: u64) -> Option<(usize, u32)> {
        self.inner.divergence(&other.inner, p).map(|d| (d.t, d.w))
    }
}

/// A nilpotent passive group, e.g. `"D4"`, `"C_9 x C_3"` or a profile.
#[pyclass(
    name = "PassiveGroup",
    module = "varwreath",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPassiveGroup {
    inner: PassiveGroupSpec,
}

#[pymethods]
impl PyPassiveGroup {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        varwreath::parse_passive(expr)
            .map(|inner| PyPassiveGroup { inner })
            .map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PassiveGroup('{}')", self.inner)
    }

    #[getter]
    fn primes(&self) -> Vec<u64> {
        self.inner.primes()
    }

    #[getter]
    fn class_(&self) -> usize {
        self.inner.class()
    }

    #[getter]
    fn derived_length(&self) -> Option<u32> {
        self.inner.derived_length()
    }

    #[getter]
    fn exponent(&self) -> PyResult<u64> {
        self.inner.exponent().map_err(to_py)
    }

    /// Lower central profile `s(1), ..., s(c)` of the Sylow `p`-subgroup.
    fn profile(&self, p: u64) -> Option<Vec<u32>> {
        self.inner.part(p).map(|part| part.s().to_vec())
    }
}

#[pyclass(name = "ShieldParams", module = "varwreath", frozen, get_all)]
pub struct PyShieldParams {
    p: u64,
    d: u64,
    e: Vec<u64>,
    a: u64,
    b: u64,
}

#[pymethods]
impl PyShieldParams {
    fn __repr__(&self) -> String {
        format!(
            "ShieldParams(p={}, d={}, e={:?}, a={}, b={})",
            self.p, self.d, self.e, self.a, self.b
        )
    }
}

#[pyclass(name = "Fingerprint", module = "varwreath", frozen, get_all)]
pub struct PyFingerprint {
    exponent: u64,
    nilpotent: bool,
    class_: Option<u64>,
    solubility_bound: Option<u32>,
}

#[pymethods]
impl PyFingerprint {
    fn __repr__(&self) -> String {
        format!(
            "Fingerprint(exponent={}, nilpotent={}, class_={:?}, solubility_bound={:?})",
            self.exponent, self.nilpotent, self.class_, self.solubility_bound
        )
    }
}

impl From<varwreath::Fingerprint> for PyFingerprint {
    fn from(f: varwreath::Fingerprint) -> Self {
        PyFingerprint {
            exponent: f.exponent,
            nilpotent: f.nilpotent,
            class_: f.class,
            solubility_bound: f.solubility_bound,
        }
    }
}

/// Separating variety `N_c B_e` for a diverging prime. `swapped` is true
/// when the second input group is the one outside the variety.
#[pyclass(name = "Witness", module = "varwreath", frozen, get_all)]
pub struct PyWitness {
    p: u64,
    t: usize,
    w: u32,
    class_b1: u64,
    class_b2: u64,
    reduced_b1: PyAbelianGroup,
    reduced_b2: PyAbelianGroup,
    swapped: bool,
    variety_class: u64,
    burnside_exponent: u64,
}

#[pymethods]
impl PyWitness {
    #[getter]
    fn variety(&self) -> String {
        format!("N_{} B_{}", self.variety_class, self.burnside_exponent)
    }

    fn __repr__(&self) -> String {
        format!(
            "Witness(p={}, t={}, w={}, variety='{}')",
            self.p,
            self.t,
            self.w,
            self.variety()
        )
    }
}

impl From<varwreath::SeparationWitness> for PyWitness {
    fn from(w: varwreath::SeparationWitness) -> Self {
        PyWitness {
            p: w.p,
            t: w.t,
            w: w.w,
            class_b1: w.reduced_class_b1,
            class_b2: w.reduced_class_b2,
            reduced_b1: w.reduced_b1.into(),
            reduced_b2: w.reduced_b2.into(),
            swapped: w.swapped,
            variety_class: w.separating.class,
            burnside_exponent: w.separating.burnside_exponent,
        }
    }
}

#[pyclass(name = "Decision", module = "varwreath", frozen)]
pub struct PyDecision {
    inner: varwreath::Decision,
}

#[pymethods]
impl PyDecision {
    /// `"equal"`, `"unequal"` or `"not_applicable"`.
    #[getter]
    fn verdict(&self) -> &'static str {
        self.inner.verdict.as_str()
    }

    #[getter]
    fn reason(&self) -> Option<String> {
        match &self.inner.verdict {
            Verdict::NotApplicable(reason) => Some(reason.clone()),
            _ => None,
        }
    }

    #[getter]
    fn equal(&self) -> Option<bool> {
        match self.inner.verdict {
            Verdict::Equal => Some(true),
            Verdict::Unequal => Some(false),
            Verdict::NotApplicable(_) => None,
        }
    }

    /// `(name, holds, detail)` per hypothesis.
    #[getter]
    fn hypotheses(&self) -> Vec<(&'static str, bool, String)> {
        self.inner
            .hypotheses
            .iter()
            .map(|h| (h.name, h.holds, h.detail.clone()))
            .collect()
    }

    /// `(p, equivalent, t, w)` per prime of the passive exponent.
    #[getter]
    fn per_prime(&self) -> Vec<(u64, bool, Option<usize>, Option<u32>)> {
        self.inner
            .per_prime
            .iter()
            .map(|v| (v.p, v.equivalent, v.t, v.w))
            .collect()
    }

    #[getter]
    fn witness(&self) -> Option<PyWitness> {
        self.inner.witness.clone().map(PyWitness::from)
    }

    #[getter]
    fn fingerprints(&self) -> Vec<PyFingerprint> {
        self.inner
            .fingerprints
            .iter()
            .cloned()
            .map(PyFingerprint::from)
            .collect()
    }

    fn __bool__(&self) -> bool {
        self.inner.verdict == Verdict::Equal
    }

    fn __repr__(&self) -> String {
        format!("Decision({})", self.inner.verdict)
    }
}

#[pyclass(name = "ShieldCheck", module = "varwreath", frozen, get_all)]
pub struct PyShieldCheck {
    label: String,
    order: usize,
    shield_class: u64,
    oracle_class: Option<usize>,
    class_equal: bool,
    spec_exponent: u64,
    oracle_exponent: u64,
    exponent_equal: bool,
    symbolic_chain: Vec<u64>,
    concrete_chain: Vec<u64>,
    chain_equal: bool,
}

#[pymethods]
impl PyShieldCheck {
    #[getter]
    fn all_equal(&self) -> bool {
        self.class_equal && self.exponent_equal && self.chain_equal
    }

    fn __repr__(&self) -> String {
        format!(
            "ShieldCheck(label='{}', order={}, shield_class={}, oracle_class={:?})",
            self.label, self.order, self.shield_class, self.oracle_class
        )
    }
}

impl From<oracle::ShieldCheck> for PyShieldCheck {
    fn from(c: oracle::ShieldCheck) -> Self {
        PyShieldCheck {
            label: c.label,
            order: c.order,
            shield_class: c.shield_class,
            oracle_class: c.oracle_class,
            class_equal: c.class_equal,
            spec_exponent: c.spec_exponent,
            oracle_exponent: c.oracle_exponent,
            exponent_equal: c.exponent_equal,
            symbolic_chain: c.symbolic_chain,
            concrete_chain: c.concrete_chain,
            chain_equal: c.chain_equal,
        }
    }
}

/// Terms `K_1, ..., K_{d+1}` of the K_p-series of `b`.
#[pyfunction]
fn kp_series(b: &PyAbelianGroup, p: u64) -> PyResult<Vec<PyAbelianGroup>> {
    let chain = varwreath::kp_series(&b.inner, p).map_err(to_py)?;
    Ok(chain.terms.into_iter().map(PyAbelianGroup::from).collect())
}

#[pyfunction]
fn shield_params(b: &PyAbelianGroup, p: u64) -> PyResult<PyShieldParams> {
    let s = varwreath::shield_params(&b.inner, p).map_err(to_py)?;
    Ok(PyShieldParams {
        p: s.p,
        d: s.d,
        e: s.e,
        a: s.a,
        b: s.b,
    })
}

/// Nilpotency class of `a Wr b`.
#[pyfunction]
fn shield_class(a: &PyPassiveGroup, b: &PyAbelianGroup) -> PyResult<u64> {
    varwreath::shield_class(&a.inner, &b.inner).map_err(to_py)
}

#[pyfunction]
fn wreath_exponent(a: &PyPassiveGroup, b: &PyAbelianGroup) -> PyResult<u64> {
    varwreath::wreath_exponent(&a.inner, &b.inner).map_err(to_py)
}

/// Reason `a Wr b` is not nilpotent, or `None` when it is.
#[pyfunction]
fn baumslag_obstruction(a: &PyPassiveGroup, b: &PyAbelianGroup) -> PyResult<Option<String>> {
    varwreath::baumslag_obstruction(&a.inner, &b.inner).map_err(to_py)
}

#[pyfunction]
fn fingerprint(a: &PyPassiveGroup, b: &PyAbelianGroup) -> PyResult<PyFingerprint> {
    varwreath::fingerprint(&a.inner, &b.inner)
        .map(PyFingerprint::from)
        .map_err(to_py)
}

/// Decides whether `a1 Wr b1` and `a2 Wr b2` generate the same variety.
#[pyfunction]
#[pyo3(signature = (a1, a2, b1, b2, assert_var_equal = false))]
fn decide(
    a1: &PyPassiveGroup,
    a2: &PyPassiveGroup,
    b1: &PyAbelianGroup,
    b2: &PyAbelianGroup,
    assert_var_equal: bool,
) -> PyResult<PyDecision> {
    let input = DecisionInput {
        a1: a1.inner.clone(),
        a2: a2.inner.clone(),
        b1: b1.inner.clone(),
        b2: b2.inner.clone(),
        assert_passive_var_equal: assert_var_equal,
    };
    varwreath::decide_equal(&input)
        .map(|inner| PyDecision { inner })
        .map_err(to_py)
}

#[pyfunction]
fn separation_witness(
    a: &PyPassiveGroup,
    b1: &PyAbelianGroup,
    b2: &PyAbelianGroup,
    p: u64,
) -> PyResult<PyWitness> {
    varwreath::separation_witness(&a.inner, &b1.inner, &b2.inner, p)
        .map(PyWitness::from)
        .map_err(to_py)
}

/// Builds `passive Wr active` as a permutation group and checks class,
/// exponent and K_p-series against the symbolic values.
#[pyfunction]
#[pyo3(signature = (passive, active, budget = DEFAULT_BUDGET))]
fn verify_shield(
    py: Python<'_>,
    passive: &str,
    active: &str,
    budget: usize,
) -> PyResult<PyShieldCheck> {
    let items = varwreath::parse_passive_items(passive).map_err(to_py)?;
    let b = varwreath::parse_abelian(active).map_err(to_py)?;
    py.detach(|| oracle::verify_items(&items, &b, budget))
        .map(PyShieldCheck::from)
        .map_err(to_py)
}

#[pymodule]
fn _varwreath(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("VarwreathError", py.get_type::<VarwreathError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("BudgetExceededError", py.get_type::<BudgetExceededError>())?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    m.add_class::<PyAbelianGroup>()?;
    m.add_class::<PyPassiveGroup>()?;
    m.add_class::<PyShieldParams>()?;
    m.add_class::<PyFingerprint>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyDecision>()?;
    m.add_class::<PyShieldCheck>()?;
    m.add_function(wrap_pyfunction!(kp_series, m)?)?;
    m.add_function(wrap_pyfunction!(shield_params, m)?)?;
    m.add_function(wrap_pyfunction!(shield_class, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(baumslag_obstruction, m)?)?;
    m.add_function(wrap_pyfunction!(fingerprint, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(separation_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_shield, m)?)?;
    Ok(())
}
