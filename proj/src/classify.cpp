#include "nht/classify.hpp"

#include <bit>

namespace nht {

namespace {

Verdict pass() { return {true, std::nullopt}; }

Verdict fail(Witness w) { return {false, std::move(w)}; }

Verdict residue_mismatch(int n, const std::string& wanted) {
  Witness w;
  w.kind = Witness::Kind::Residue;
  w.measured = n;
  w.detail = "order " + std::to_string(n) + " is not of the form " + wanted;
  return fail(std::move(w));
}

Verdict bad_arc(Vertex u, Vertex v, int lambda, const std::string& wanted) {
  Witness w;
  w.kind = Witness::Kind::Arc;
  w.u = u;
  w.v = v;
  w.measured = lambda;
  w.detail = "lambda " + std::to_string(lambda) + ", expected " + wanted;
  return fail(std::move(w));
}

Verdict bad_vertex(const Tournament& t, Vertex u, const std::string& wanted) {
  Witness w;
  w.kind = Witness::Kind::Vertex;
  w.u = u;
  w.measured = t.out_degree(u);
  w.detail = "semi-degrees (" + std::to_string(t.out_degree(u)) + "," +
             std::to_string(t.in_degree(u)) + "), expected " + wanted;
  return fail(std::move(w));
}

}  // namespace

Verdict is_regular(const Tournament& t) {
  for (Vertex u = 0; u < t.order(); ++u) {
    if (t.out_degree(u) != t.in_degree(u)) return bad_vertex(t, u, "equal semi-degrees");
  }
  return pass();
}

Verdict is_almost_regular(const Tournament& t) {
  const int n = t.order();
  if (n % 2 != 0) return residue_mismatch(n, "2k");
  const int k = n / 2;
  for (Vertex u = 0; u < n; ++u) {
    const int d = t.out_degree(u);
    if (d != k && d != k - 1) {
      return bad_vertex(t, u, "(" + std::to_string(k) + "," + std::to_string(k - 1) + ") or (" +
                                  std::to_string(k - 1) + "," + std::to_string(k) + ")");
    }
  }
  return pass();
}

Verdict is_homogeneous(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 3) return residue_mismatch(n, "4t+3");
  const int want = derived_t(n) + 1;
  for (const Arc& a : t.arcs()) {
    const int lambda = cyclic_index(t, a.tail, a.head);
    if (lambda != want) return bad_arc(a.tail, a.head, lambda, std::to_string(want));
  }
  return pass();
}

Verdict is_doubly_regular(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 3) return residue_mismatch(n, "4t+3");
  if (Verdict r = is_regular(t); !r) return r;
  const int want = derived_t(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int common = std::popcount(t.out_row(u) & t.out_row(v));
      if (common != want) {
        Witness w;
        w.kind = Witness::Kind::Pair;
        w.u = u;
        w.v = v;
        w.measured = common;
        w.detail = std::to_string(common) + " common out-neighbours, expected " + std::to_string(want);
        return fail(std::move(w));
      }
    }
  }
  return pass();
}

Verdict is_near_homogeneous_4t1(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 1 || n < 5) return residue_mismatch(n, "4t+1 with t >= 1");
  const int tp = derived_t(n);
  for (const Arc& a : t.arcs()) {
    const int lambda = cyclic_index(t, a.tail, a.head);
    if (lambda != tp && lambda != tp + 1) {
      return bad_arc(a.tail, a.head, lambda, std::to_string(tp) + " or " + std::to_string(tp + 1));
    }
  }
  return pass();
}

Verdict is_near_homogeneous_4t2(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 2 || n < 6) return residue_mismatch(n, "4t+2 with t >= 1");
  if (Verdict r = is_almost_regular(t); !r) return r;
  const int tp = derived_t(n);
  for (const Arc& a : t.arcs()) {
    const int lambda = cyclic_index(t, a.tail, a.head);
    const ArcClass c = arc_class(t, a.tail, a.head);
    const int want = c == ArcClass::C ? tp : tp + 1;
    if (lambda != want) {
      return bad_arc(a.tail, a.head, lambda,
                     std::to_string(want) + " for class " + std::string(1, to_char(c)));
    }
  }
  return pass();
}

Verdict is_near_homogeneous_4t(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 0 || n < 4) return residue_mismatch(n, "4t with t >= 1");
  if (Verdict r = is_almost_regular(t); !r) return r;
  const int tp = derived_t(n);
  bool seen_zero = false;
  for (const Arc& a : t.arcs()) {
    const int lambda = cyclic_index(t, a.tail, a.head);
    const ArcClass c = arc_class(t, a.tail, a.head);
    const std::string cls(1, to_char(c));
    if (c == ArcClass::D) {
      if (lambda != tp + 1) return bad_arc(a.tail, a.head, lambda, std::to_string(tp + 1) + " for class D");
    } else if (c == ArcClass::C && lambda == 0) {
      if (seen_zero) return bad_arc(a.tail, a.head, 0, std::to_string(tp) + " (second class C arc at 0)");
      seen_zero = true;
    } else if (lambda != tp) {
      return bad_arc(a.tail, a.head, lambda, std::to_string(tp) + " for class " + cls);
    }
  }
  if (!seen_zero) {
    Witness w;
    w.kind = Witness::Kind::Count;
    w.detail = "no class C arc has lambda 0";
    return fail(std::move(w));
  }
  return pass();
}

std::optional<int> constant_lambda(const LambdaHistogram& h) {
  if (h.size() != 1) return std::nullopt;
  return h.begin()->first;
}

std::optional<std::array<int, 4>> constant_class_lambdas(const ClassHistograms& h) {
  std::array<int, 4> result{};
  for (ArcClass c : kArcClasses) {
    const auto value = constant_lambda(h[c]);
    if (!value) return std::nullopt;
    result[static_cast<int>(c)] = *value;
  }
  return result;
}

bool constant_class_pattern_holds(int n, const std::array<int, 4>& lambdas) {
  if (n % 4 != 2) return false;
  const int tp = derived_t(n);
  return lambdas == std::array<int, 4>{tp + 1, tp + 1, tp, tp + 1};
}

ClassificationReport classify(const Tournament& t) {
  ClassificationReport r;
  r.order = t.order();
  r.t = derived_t(t.order());
  r.regular = is_regular(t);
  r.almost_regular = is_almost_regular(t);
  r.homogeneous = is_homogeneous(t);
  r.doubly_regular = is_doubly_regular(t);
  r.nh_4t1 = is_near_homogeneous_4t1(t);
  r.nh_4t2 = is_near_homogeneous_4t2(t);
  r.nh_4t = is_near_homogeneous_4t(t);
  r.lambdas = cyclic_index_histogram(t);
  r.two_paths = two_path_census(t);
  if (r.almost_regular) {
    r.class_lambdas = cyclic_index_histogram_by_class(t);
    r.constant_classes = constant_class_lambdas(*r.class_lambdas);
    r.cd_balance = class_cd_cycle_balance(t);
  }
  return r;
}

std::string describe(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Arc:
      return "arc " + std::to_string(w.u) + "->" + std::to_string(w.v) + ": " + w.detail;
    case Witness::Kind::Pair:
      return "pair {" + std::to_string(w.u) + "," + std::to_string(w.v) + "}: " + w.detail;
    case Witness::Kind::Vertex:
      return "vertex " + std::to_string(w.u) + ": " + w.detail;
    case Witness::Kind::Residue:
    case Witness::Kind::Count:
      return w.detail;
  }
  return w.detail;
}

}  // namespace nht
