//! C ABI over the `longhole` library.
//!
//! Every fallible function returns an [`LhStatus`]; on failure a message is available from
//! [`lh_last_error`] on the same thread. Objects are opaque handles released with the
//! matching `*_free` function. Strings returned through out-parameters are released with
//! [`lh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use longhole::budget::Budget;
use longhole::harness::{self, Engine, Format, RunReport, Verdict};
use longhole::{Error, Graph};

/// Result codes of the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LhStatus {
    Ok = 0,
    /// A required pointer was null.
    NullPointer = 1,
    /// A parameter was out of range, such as `l` odd or below 6.
    InvalidArgument = 2,
    /// Input text could not be parsed.
    ParseError = 3,
    /// The edges do not describe a simple graph within capacity.
    InvalidGraph = 4,
    /// The deadline passed before an answer was found.
    Timeout = 5,
    /// An internal invariant failed.
    Internal = 6,
}

/// Which procedure answers a detection query.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LhEngine {
    Pipeline = 0,
    Oracle = 1,
}

/// An immutable simple graph.
pub struct LhGraph(Graph);

/// The outcome of one detection query.
pub struct LhReport(RunReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: LhStatus, msg: impl Into<String>) -> LhStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> LhStatus {
    match e {
        Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..) | Error::TooManyVertices(_) => {
            LhStatus::InvalidGraph
        }
        Error::InvalidParameter(_) => LhStatus::InvalidArgument,
        Error::Interrupted => LhStatus::Timeout,
        Error::Precondition(_) | Error::InvalidWitness(_) => LhStatus::Internal,
    }
}

fn guard(body: impl FnOnce() -> LhStatus) -> LhStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(LhStatus::Internal, "panic inside longhole"))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// The message of the last failure on this thread, or null. Valid until the next call into
/// this library on the same thread.
#[no_mangle]
pub extern "C" fn lh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`
/// (`2 * edge_count` entries). `edges` may be null when `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_new(n: usize, edges: *const usize, edge_count: usize, out: *mut *mut LhGraph) -> LhStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(LhStatus::NullPointer, "null pointer argument");
        }
        let flat: &[usize] = if edge_count == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        match Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))) {
            Ok(g) => {
                write_out(out, LhGraph(g));
                LhStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

unsafe fn parse(text: *const c_char, format: Format, out: *mut *mut LhGraph) -> LhStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(LhStatus::NullPointer, "null pointer argument");
        }
        match harness::parse_graph(CStr::from_ptr(text).to_bytes(), format) {
            Ok(g) => {
                write_out(out, LhGraph(g));
                LhStatus::Ok
            }
            Err(harness::ParseError::Invalid(e)) => fail(status_of(&e), e.to_string()),
            Err(e) => fail(LhStatus::ParseError, e.to_string()),
        }
    })
}

/// Parses one graph6 record.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_from_graph6(text: *const c_char, out: *mut *mut LhGraph) -> LhStatus {
    parse(text, Format::Graph6, out)
}

/// Parses an edge list: one `u v` pair per line, `#` comments and blank lines ignored.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_from_edge_list(text: *const c_char, out: *mut *mut LhGraph) -> LhStatus {
    parse(text, Format::EdgeList, out)
}

/// # Safety
/// `graph` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_free(graph: *mut LhGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_vertex_count(graph: *const LhGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_edge_count(graph: *const LhGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Encodes the graph as graph6; release the string with `lh_string_free`.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_graph_to_graph6(graph: *const LhGraph, out: *mut *mut c_char) -> LhStatus {
    guard(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return fail(LhStatus::NullPointer, "null pointer argument");
        };
        *out = to_c_string(harness::encode_graph6(&g.0));
        LhStatus::Ok
    })
}

/// Decides whether `graph` has an induced even cycle of length at least `ell` (even, at
/// least 6). A `timeout_ms` of 0 means no limit; the oracle engine ignores it.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_detect(
    graph: *const LhGraph,
    ell: usize,
    engine: LhEngine,
    timeout_ms: u64,
    out: *mut *mut LhReport,
) -> LhStatus {
    guard(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return fail(LhStatus::NullPointer, "null pointer argument");
        };
        if ell < 6 || ell % 2 == 1 {
            return fail(LhStatus::InvalidArgument, format!("l must be an even integer >= 6, got {ell}"));
        }
        let budget = if timeout_ms == 0 { Budget::unlimited() } else { Budget::with_timeout(Duration::from_millis(timeout_ms)) };
        let engine = match engine {
            LhEngine::Pipeline => Engine::Pipeline,
            LhEngine::Oracle => Engine::Oracle,
        };
        let report = match harness::run(&g.0, ell, engine, &budget) {
            Ok(r) => r,
            Err(e) => return fail(status_of(&e), e.to_string()),
        };
        if let Err(e) = report.validate(&g.0) {
            return fail(LhStatus::Internal, e.to_string());
        }
        write_out(out, LhReport(report));
        LhStatus::Ok
    })
}

/// # Safety
/// `report` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lh_report_free(report: *mut LhReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// True iff a long even hole was found.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_report_found(report: *const LhReport) -> bool {
    report.as_ref().is_some_and(|r| r.0.verdict == Verdict::Yes)
}

/// Name of the deciding stage as a static string, for example `"short-hole"` or `"none"`.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_report_stage(report: *const LhReport) -> *const c_char {
    let Some(r) = report.as_ref() else { return ptr::null() };
    let name: &'static str = match r.0.stage.to_string().as_str() {
        "short-hole" => "short-hole\0",
        "jewel" => "jewel\0",
        "theta" => "theta\0",
        "ban-the-bomb" => "ban-the-bomb\0",
        "near-prism" => "near-prism\0",
        "clean-hole" => "clean-hole\0",
        "exhaustive" => "exhaustive\0",
        _ => "none\0",
    };
    name.as_ptr().cast()
}

/// Number of witness vertices; 0 when nothing was found.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_report_witness_len(report: *const LhReport) -> usize {
    report.as_ref().and_then(|r| r.0.witness.as_ref()).map_or(0, Vec::len)
}

/// Copies up to `capacity` witness vertices, in cyclic order, into `buffer` and returns the
/// full witness length.
///
/// # Safety
/// `report` must be a live handle and `buffer` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn lh_report_witness(report: *const LhReport, buffer: *mut usize, capacity: usize) -> usize {
    let Some(w) = report.as_ref().and_then(|r| r.0.witness.as_ref()) else { return 0 };
    if !buffer.is_null() {
        let k = w.len().min(capacity);
        ptr::copy_nonoverlapping(w.as_ptr(), buffer, k);
    }
    w.len()
}

/// Wall-clock time of the query in milliseconds.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_report_elapsed_ms(report: *const LhReport) -> f64 {
    report.as_ref().map_or(0.0, |r| r.0.elapsed_ms)
}

/// The report as a JSON object; release the string with `lh_string_free`.
///
/// # Safety
/// `report` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_report_to_json(report: *const LhReport, out: *mut *mut c_char) -> LhStatus {
    guard(|| {
        let (Some(r), false) = (report.as_ref(), out.is_null()) else {
            return fail(LhStatus::NullPointer, "null pointer argument");
        };
        match serde_json::to_string(&r.0) {
            Ok(s) => {
                *out = to_c_string(s);
                LhStatus::Ok
            }
            Err(e) => fail(LhStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
