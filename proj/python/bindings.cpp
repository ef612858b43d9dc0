// Python bindings for the exact streaming/Hankel toolkit. Rationals cross
// the boundary as fractions.Fraction; series travel as coefficient lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "gfstream/continual.hpp"
#include "gfstream/hankel.hpp"
#include "gfstream/ratgf.hpp"
#include "gfstream/series.hpp"
#include "gfstream/streamkit.hpp"
#include "gfstream/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<gfs::Rat> {
  PYBIND11_TYPE_CASTER(gfs::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (src.is_none()) return false;
    object fraction = module_::import("fractions").attr("Fraction");
    if (PyLong_Check(src.ptr()) || isinstance(src, fraction) ||
        isinstance<str>(src)) {
      try {
        object as_frac = fraction(src);
        std::string text = str(as_frac).cast<std::string>();
        value = gfs::rat_from_string(text);
        return true;
      } catch (...) {
        return false;
      }
    }
    return false;
  }

  static handle cast(const gfs::Rat& r, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(gfs::to_string(r)).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace gfs;

std::vector<Rat> coeffs_of(const Series& s) { return s.coeffs(); }

Series to_series(const std::vector<Rat>& coeffs) { return Series(coeffs); }

RationalGF make_ratgf(const std::vector<Rat>& p, const std::vector<Rat>& q) {
  return RationalGF(Poly(p), Poly(q));
}

std::vector<Rat> poly_coeffs(const Poly& p) {
  if (p.is_zero()) return {Rat(0)};
  return p.coeffs();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact streaming of lower-triangular Toeplitz convolutions via "
      "generating functions, with Hankel rank/determinant certificates";

  // series-level operations (series = list of Fraction, index k -> a_k)
  m.def("catalog",
        [](const std::string& name, std::size_t order) {
          return coeffs_of(catalog(name, order));
        },
        py::arg("name"), py::arg("order"),
        "named generating function, e.g. catalog('g_half', 8)");
  m.def("parse_series",
        [](const std::string& expr, std::size_t order) {
          return coeffs_of(parse(expr, order));
        },
        py::arg("expr"), py::arg("order"),
        "evaluate an expression like '1/sqrt(1-x)' to the given order");
  m.def("render_series",
        [](const std::vector<Rat>& f) { return render(to_series(f)); },
        py::arg("f"));
  m.def("series_add", [](const std::vector<Rat>& f, const std::vector<Rat>& g) {
    return coeffs_of(add(to_series(f), to_series(g)));
  });
  m.def("series_sub", [](const std::vector<Rat>& f, const std::vector<Rat>& g) {
    return coeffs_of(sub(to_series(f), to_series(g)));
  });
  m.def("series_mul", [](const std::vector<Rat>& f, const std::vector<Rat>& g) {
    return coeffs_of(mul(to_series(f), to_series(g)));
  });
  m.def("series_div", [](const std::vector<Rat>& f, const std::vector<Rat>& g) {
    return coeffs_of(div(to_series(f), to_series(g)));
  });
  m.def("series_inv",
        [](const std::vector<Rat>& f) { return coeffs_of(inv(to_series(f))); });
  m.def("series_sqrt", [](const std::vector<Rat>& f) {
    return coeffs_of(sqrt(to_series(f)));
  });
  m.def("series_scale", [](const Rat& c, const std::vector<Rat>& f) {
    return coeffs_of(scale(c, to_series(f)));
  });
  m.def("series_shift_mul_x", [](const std::vector<Rat>& f) {
    return coeffs_of(shift_mul_x(to_series(f)));
  });

  // rational generating functions
  py::class_<RationalGF>(m, "RationalGF")
      .def(py::init(&make_ratgf), py::arg("P"), py::arg("Q"))
      .def_property_readonly(
          "P", [](const RationalGF& g) { return poly_coeffs(g.numerator()); })
      .def_property_readonly(
          "Q", [](const RationalGF& g) { return poly_coeffs(g.denominator()); })
      .def_property_readonly("degree", &RationalGF::degree)
      .def("__eq__", [](const RationalGF& a, const RationalGF& b) { return a == b; })
      .def("__repr__", [](const RationalGF& g) {
        return "RationalGF(P=" + to_string(g.numerator()) +
               ", Q=" + to_string(g.denominator()) + ")";
      });

  m.def("expand",
        [](const RationalGF& g, std::size_t order) {
          return coeffs_of(expand(g, order));
        },
        py::arg("g"), py::arg("order"));
  m.def("pade",
        [](const std::vector<Rat>& f, std::size_t d) {
          return pade(to_series(f), d);
        },
        py::arg("f"), py::arg("d"),
        "coefficient-matching rational approximant of degree at most d");
  m.def("approx_error",
        [](const std::vector<Rat>& f, const RationalGF& g, std::size_t n) {
          return approx_error(to_series(f), g, n);
        },
        py::arg("f"), py::arg("g"), py::arg("n"));

  // streaming
  py::class_<StreamRun>(m, "StreamRun")
      .def_readonly("inputs", &StreamRun::inputs)
      .def_readonly("outputs", &StreamRun::outputs)
      .def_readonly("max_buffer", &StreamRun::max_buffer);

  py::class_<Streamer>(m, "Streamer")
      .def("step", &Streamer::step, py::arg("z"),
           "feed z_t, get (Tz)_t")
      .def_property_readonly("time", &Streamer::time)
      .def_property_readonly("buffer_size", &Streamer::buffer_size)
      .def("clone", &Streamer::clone);

  m.def("dense_streamer",
        [](const std::vector<Rat>& a) { return dense_streamer(to_series(a)); },
        py::arg("a"), "reference streamer with buffer t+1");
  m.def("rational_streamer", &rational_streamer, py::arg("g"),
        "constant-buffer streamer, buffer min(t+1, degree)");
  m.def("compose_seq", &compose_seq, py::arg("left"), py::arg("right"),
        "streamer for the product L*R");
  m.def("compose_par", &compose_par, py::arg("a"), py::arg("b"),
        "streamer for the sum A+B");
  m.def("run",
        [](Streamer& s, const std::vector<Rat>& z) { return run(s, z); },
        py::arg("streamer"), py::arg("z"));

  // Hankel certificates
  py::class_<RankCertificate>(m, "RankCertificate")
      .def_readonly("t", &RankCertificate::t)
      .def_readonly("I", &RankCertificate::I)
      .def_readonly("rank", &RankCertificate::rank)
      .def_readonly("witness", &RankCertificate::witness)
      .def("__repr__", [](const RankCertificate& c) {
        return "RankCertificate(t=" + std::to_string(c.t) +
               ", I=" + std::to_string(c.I) +
               ", rank=" + std::to_string(c.rank) + ")";
      });

  py::class_<DegreeReport>(m, "DegreeReport")
      .def_readonly("truncation", &DegreeReport::truncation)
      .def_readonly("ranks", &DegreeReport::ranks)
      .def_readonly("degree", &DegreeReport::degree)
      .def_readonly("message", &DegreeReport::message);

  m.def("hankel_det",
        [](const std::vector<Rat>& a, std::size_t d) {
          return det(HankelView(to_series(a), d, d));
        },
        py::arg("a"), py::arg("d"), "exact determinant of H[a]^(d,d)");
  m.def("hankel_rank",
        [](const std::vector<Rat>& a, std::size_t I, std::size_t J) {
          return rank(HankelView(to_series(a), I, J));
        },
        py::arg("a"), py::arg("I"), py::arg("J"),
        "exact rank of H[a]^(I,J)");
  m.def("space_lower_bound",
        [](const std::vector<Rat>& a, std::size_t t, std::size_t I) {
          return space_lower_bound(to_series(a), t, I);
        },
        py::arg("a"), py::arg("t"), py::arg("I"),
        "buffer lower-bound certificate rank(H^(I,t))");
  m.def("detect_degree",
        [](const std::vector<Rat>& a) { return detect_degree(to_series(a)); },
        py::arg("a"));

  // verification suites
  py::class_<ReportLine>(m, "ReportLine")
      .def_readonly("d", &ReportLine::d)
      .def_readonly("expected", &ReportLine::expected)
      .def_readonly("got", &ReportLine::got)
      .def_readonly("ok", &ReportLine::ok)
      .def_readonly("detail", &ReportLine::detail);

  py::class_<Report>(m, "Report")
      .def_readonly("suite", &Report::suite)
      .def_readonly("lines", &Report::lines)
      .def_property_readonly("ok", &Report::ok);

  m.def("verify_catalan_dets", &verify_catalan_dets, py::arg("d_max") = 12);
  m.def("verify_sqrt_dets", &verify_sqrt_dets, py::arg("d_max") = 12);
  m.def("verify_junod", &verify_junod, py::arg("b"), py::arg("c"),
        py::arg("d_max") = 12);
  m.def("verify_corank", &verify_corank, py::arg("lam"), py::arg("mu"),
        py::arg("d_max") = 10);
  m.def("check_comp_relation",
        [](const std::vector<Rat>& f, const std::vector<Rat>& g,
           const Rat& alpha, const Rat& beta, const Rat& gamma,
           std::size_t d_max) {
          return check_comp_relation(
              CompRelation{to_series(f), to_series(g), alpha, beta, gamma},
              d_max);
        },
        py::arg("f"), py::arg("g"), py::arg("alpha"), py::arg("beta"),
        py::arg("gamma"), py::arg("d_max"));

  // correlated-noise continual counting
  py::class_<MechanismReport>(m, "MechanismReport")
      .def_readonly("outputs", &MechanismReport::outputs)
      .def_readonly("noise", &MechanismReport::noise)
      .def_readonly("max_buffer", &MechanismReport::max_buffer)
      .def_readonly("coeff_error", &MechanismReport::coeff_error)
      .def_readonly("shaper_gf", &MechanismReport::shaper_gf);

  py::class_<Mechanism>(m, "Mechanism")
      .def(py::init([](const RationalGF& shaper, std::uint64_t seed) {
             return std::make_unique<Mechanism>(rational_streamer(shaper),
                                                NoiseSource::seeded(seed));
           }),
           py::arg("shaper"), py::arg("seed"))
      .def(py::init([](const RationalGF& shaper, const std::vector<Rat>& noise) {
             return std::make_unique<Mechanism>(rational_streamer(shaper),
                                                NoiseSource::recorded(noise));
           }),
           py::arg("shaper"), py::arg("noise"))
      .def("step", &Mechanism::step, py::arg("z"))
      .def_property_readonly("buffer_size", &Mechanism::buffer_size)
      .def_property_readonly("noise_used", &Mechanism::noise_used);

  m.def("mechanism_run", &mechanism_run, py::arg("length"),
        py::arg("approx_degree"), py::arg("seed"), py::arg("z"),
        "counting mechanism with a Pade-approximated noise shaper");
}
