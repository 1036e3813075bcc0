//! Python bindings: the closed-form invariants as module functions and the
//! Lazard engine as a class working on plain coordinate lists.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::sync::Arc;

use dispogroup::engine::{self, GroupContext, GroupElement};
use dispogroup::invariants;
use dispogroup::numtheory;
use dispogroup::{ClassRow, GroupParams};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn params(p: u64, d: u64, c: u64) -> PyResult<GroupParams> {
    GroupParams::new(p, d, c).map_err(value_err)
}

#[pyfunction]
fn mobius(m: u64) -> PyResult<i32> {
    numtheory::mobius(m).map_err(value_err)
}

#[pyfunction]
fn witt(n: u64, d: BigUint) -> PyResult<BigUint> {
    if n < 1 {
        return Err(value_err("witt requires n >= 1"));
    }
    Ok(numtheory::witt(n, &d))
}

#[pyfunction]
fn lyndon_count(n: u64, d: u64) -> PyResult<BigUint> {
    numtheory::lyndon_count(n, d).map_err(value_err)
}

#[pyfunction]
fn nested_chi(tail: Vec<u64>, s: BigUint) -> PyResult<BigUint> {
    if tail.contains(&0) {
        return Err(value_err("class row entries must be positive"));
    }
    Ok(numtheory::nested_chi(&tail, &s))
}

#[pyfunction]
fn group_order_exponent(p: u64, d: u64, c: u64) -> PyResult<BigUint> {
    Ok(params(p, d, c)?.group_order_exponent())
}

#[pyfunction]
fn gamma_order_exponent(p: u64, d: u64, c: u64, i: u64) -> PyResult<BigUint> {
    params(p, d, c)?.gamma_order_exponent(i).map_err(value_err)
}

#[pyfunction]
fn lambda_order_exponent(p: u64, d: u64, c: u64, j: u64) -> PyResult<BigUint> {
    params(p, d, c)?.lambda_order_exponent(j).map_err(value_err)
}

#[pyfunction]
fn upper_central_exponent(p: u64, d: u64, c: u64, i: u64) -> PyResult<BigUint> {
    params(p, d, c)?
        .upper_central_exponent(i)
        .map_err(value_err)
}

#[pyfunction]
fn lambda_layer_exponent(n: u64, k: u64, d: u64) -> PyResult<BigUint> {
    invariants::lambda_layer_exponent(n, k, d).map_err(value_err)
}

#[pyfunction]
fn nilpotent_multiplier_rank(p: u64, d: u64, c: u64, m: u64) -> PyResult<BigUint> {
    if m < 1 {
        return Err(value_err("multiplier class m must be at least 1"));
    }
    Ok(params(p, d, c)?.nilpotent_multiplier_rank(m))
}

#[pyfunction]
fn schur_multiplier_rank(p: u64, d: u64, c: u64) -> PyResult<BigUint> {
    Ok(params(p, d, c)?.schur_multiplier_rank())
}

#[pyfunction]
fn polynilpotent_multiplier_rank(p: u64, d: u64, c: u64, row: Vec<u64>) -> PyResult<BigUint> {
    let row = ClassRow::new(row).map_err(value_err)?;
    params(p, d, c)?
        .polynilpotent_multiplier_rank(&row)
        .map_err(value_err)
}

#[pyfunction]
fn frattini_commutator_exponent(p: u64, d: u64, c: u64, i: u64) -> PyResult<BigUint> {
    params(p, d, c)?
        .frattini_commutator_exponent(i)
        .map_err(value_err)
}

#[pyfunction]
fn burns_ellis_bound_exponent(p: u64, d: u64, c: u64, m: u64) -> PyResult<BigUint> {
    if m < 1 {
        return Err(value_err("bound class m must be at least 1"));
    }
    Ok(params(p, d, c)?.burns_ellis_bound_exponent(m))
}

#[pyfunction]
fn njp_bound_exponent(n: u64, k: u64, m: u64) -> PyResult<BigUint> {
    invariants::njp_bound_exponent(n, k, m).map_err(value_err)
}

#[pyfunction]
fn jones_generator_bound(p: u64, d: u64, c: u64) -> PyResult<BigUint> {
    Ok(params(p, d, c)?.jones_generator_bound())
}

#[pyfunction]
fn capability_check(p: u64, d: u64, c: u64, n: u64) -> PyResult<bool> {
    if n < 1 {
        return Err(value_err("capability degree n must be at least 1"));
    }
    Ok(params(p, d, c)?.capability_check(n))
}

/// The Lazard realization of G_d^c. Elements travel as plain coordinate
/// lists over the Hall basis; the weight-w coordinate lives mod p^{c+1-w}.
#[pyclass]
struct DispositionGroup {
    ctx: Arc<GroupContext>,
}

impl DispositionGroup {
    fn element(&self, coords: Vec<u32>) -> PyResult<GroupElement> {
        GroupElement::from_coords(&self.ctx, coords).map_err(value_err)
    }
}

#[pymethods]
impl DispositionGroup {
    #[new]
    fn new(p: u64, d: u64, c: u64) -> PyResult<Self> {
        let ctx = GroupContext::new(p, d, c).map_err(value_err)?;
        Ok(DispositionGroup { ctx })
    }

    fn order_exponent(&self) -> u64 {
        self.ctx.order_exponent()
    }

    /// Display names of the Hall basis elements, in coordinate order.
    fn basis(&self) -> Vec<String> {
        self.ctx.basis().iter().map(|e| e.to_string()).collect()
    }

    fn moduli(&self) -> Vec<u64> {
        (0..self.ctx.basis_len())
            .map(|i| self.ctx.modulus(i))
            .collect()
    }

    fn identity(&self) -> Vec<u32> {
        GroupElement::identity(&self.ctx).coords().to_vec()
    }

    fn generator(&self, i: usize) -> PyResult<Vec<u32>> {
        Ok(GroupElement::generator(&self.ctx, i)
            .map_err(value_err)?
            .coords()
            .to_vec())
    }

    fn multiply(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<Vec<u32>> {
        let g = self.element(a)?;
        let h = self.element(b)?;
        Ok(g.multiply(&h).map_err(value_err)?.coords().to_vec())
    }

    fn inverse(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(self.element(a)?.inverse().coords().to_vec())
    }

    fn power(&self, a: Vec<u32>, n: i64) -> PyResult<Vec<u32>> {
        Ok(self.element(a)?.power(n).coords().to_vec())
    }

    fn commutator(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<Vec<u32>> {
        let g = self.element(a)?;
        let h = self.element(b)?;
        Ok(g.commutator(&h).map_err(value_err)?.coords().to_vec())
    }

    /// Order of the element as (p, e) with order p^e.
    fn element_order(&self, a: Vec<u32>) -> PyResult<(u64, BigUint)> {
        let order = self.element(a)?.element_order();
        Ok((order.prime, order.exponent))
    }

    #[pyo3(signature = (i, cap = 2_000_000))]
    fn gamma_size(&self, i: u64, cap: usize) -> PyResult<usize> {
        Ok(engine::gamma_subgroup(&self.ctx, i, cap)
            .map_err(value_err)?
            .len())
    }

    #[pyo3(signature = (j, cap = 2_000_000))]
    fn lambda_size(&self, j: u64, cap: usize) -> PyResult<usize> {
        Ok(engine::lambda_subgroup(&self.ctx, j, cap)
            .map_err(value_err)?
            .len())
    }

    #[pyo3(signature = (cap = 2_000_000))]
    fn center_size(&self, cap: usize) -> PyResult<usize> {
        Ok(engine::center(&self.ctx, cap).map_err(value_err)?.len())
    }
}

#[pymodule]
fn dispogroup_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(mobius, m)?)?;
    m.add_function(wrap_pyfunction!(witt, m)?)?;
    m.add_function(wrap_pyfunction!(lyndon_count, m)?)?;
    m.add_function(wrap_pyfunction!(nested_chi, m)?)?;
    m.add_function(wrap_pyfunction!(group_order_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_order_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_order_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(upper_central_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_layer_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(nilpotent_multiplier_rank, m)?)?;
    m.add_function(wrap_pyfunction!(schur_multiplier_rank, m)?)?;
    m.add_function(wrap_pyfunction!(polynilpotent_multiplier_rank, m)?)?;
    m.add_function(wrap_pyfunction!(frattini_commutator_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(burns_ellis_bound_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(njp_bound_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(jones_generator_bound, m)?)?;
    m.add_function(wrap_pyfunction!(capability_check, m)?)?;
    m.add_class::<DispositionGroup>()?;
    Ok(())
}
