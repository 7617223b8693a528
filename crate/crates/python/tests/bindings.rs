use std::ffi::CString;

use dunkl_susy_py::init;
use pyo3::prelude::*;

/// The module can be registered only once per process, so keep to one test.
fn run(code: &str) {
    pyo3::append_to_inittab!(init);
    Python::attach(|py| {
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, None, None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn module_round_trip() {
    run(r#"
import dunkl_susy as ds
fam = ds.DunklFamily("hermite")
assert fam.coeffs(-1) == [-0.5, -1.0, 1.0]
assert fam.eigencheck(3).passed
g = fam.gram(3)
assert g.indices == [0, 1, -1, 2, -2, 3, -3]
p = ds.Potential("scarf1", A=2.0, alpha=1.0)
assert p.y_eigencheck(-2).passed
try:
    ds.DunklFamily("symmetric-jacobi", alpha=0.5).eigencheck(1)
    raise AssertionError("expected NotImplementedError")
except NotImplementedError:
    pass
"#);
}
