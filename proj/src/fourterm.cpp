#include "deltachroma/fourterm.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "deltachroma/binary.hpp"
#include "deltachroma/ribbon.hpp"

namespace deltachroma {

namespace {

void require_pair(const SetSystem& s, int a, int b) {
  if (a == b) throw Error("move needs two distinct elements");
  if (a < 0 || b < 0 || a >= s.size() || b >= s.size())
    throw Error("move element outside the ground set");
}

}  // namespace

SetSystem second_vassiliev_family(const SetSystem& s, int a, int b) {
  require_pair(s, a, b);
  const Mask abit = Mask{1} << a, bbit = Mask{1} << b;
  std::vector<Mask> toggles;
  for (Mask f : s.feasible())
    if ((f & bbit) && !(f & abit)) toggles.push_back((f ^ bbit) | abit);
  std::vector<Mask> fam = s.feasible();
  for (Mask t : toggles) {
    auto it = std::lower_bound(fam.begin(), fam.end(), t);
    if (it != fam.end() && *it == t)
      fam.erase(it);
    else
      fam.insert(it, t);
  }
  return SetSystem(s.size(), std::move(fam));
}

SetSystem second_vassiliev_family_alt(const SetSystem& s, int a, int b) {
  require_pair(s, a, b);
  const Mask abit = Mask{1} << a, bbit = Mask{1} << b;
  std::vector<Mask> fam;
  const Mask full = s.full_mask();
  for (Mask f = 0;; ++f) {
    bool in = s.contains(f);
    bool keep;
    if (!(f & abit) || (f & bbit)) {
      keep = in;
    } else {
      bool other = s.contains(f ^ abit ^ bbit);
      keep = (in && !other) || (!in && other);
    }
    if (keep) fam.push_back(f);
    if (f == full) break;
  }
  return SetSystem(s.size(), std::move(fam));
}

SetSystem first_vassiliev_family(const SetSystem& s, int a, int b) {
  require_pair(s, a, b);
  const Mask ab = (Mask{1} << a) | (Mask{1} << b);
  std::vector<Mask> fam;
  const Mask full = s.full_mask();
  for (Mask f = 0;; ++f) {
    bool in = s.contains(f);
    bool keep;
    if ((f & ab) != ab) {
      keep = in;
    } else {
      bool below = s.contains(f & ~ab);
      keep = (in && !below) || (!in && below);
    }
    if (keep) fam.push_back(f);
    if (f == full) break;
  }
  return SetSystem(s.size(), std::move(fam));
}

DeltaMatroid second_vassiliev(const DeltaMatroid& d, int a, int b) {
  SetSystem s = second_vassiliev_family(d.system(), a, b);
#ifndef NDEBUG
  assert(second_vassiliev_family_alt(d.system(), a, b) == s);
#endif
  return validate_delta_matroid(std::move(s));
}

DeltaMatroid first_vassiliev(const DeltaMatroid& d, int a, int b) {
  return validate_delta_matroid(first_vassiliev_family(d.system(), a, b));
}

FourTuple four_term_tuple(const DeltaMatroid& d, int a, int b) {
  DeltaMatroid d_first = first_vassiliev(d, a, b);
  DeltaMatroid d_second = second_vassiliev(d, a, b);
  DeltaMatroid d_both = first_vassiliev(d_second, a, b);
  return FourTuple{d, std::move(d_first), std::move(d_second), std::move(d_both), a, b};
}

namespace {

// Splits [0, total) into contiguous chunks, runs work(first, last) on each
// worker thread, and merges the per-chunk reports in chunk order.
SweepReport run_chunked(long long total, int jobs,
                        const std::function<void(long long, long long, SweepReport&)>& work) {
  jobs = static_cast<int>(std::min<long long>(jobs <= 0 ? 1 : jobs, std::max<long long>(total, 1)));
  std::vector<SweepReport> parts(static_cast<size_t>(jobs));
  std::vector<std::thread> threads;
  const long long chunk = (total + jobs - 1) / std::max(1, jobs);
  for (int w = 0; w < jobs; ++w) {
    const long long lo = w * chunk;
    const long long hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi, w] { work(lo, hi, parts[static_cast<size_t>(w)]); });
  }
  for (auto& t : threads) t.join();
  SweepReport merged;
  for (const auto& p : parts) {
    merged.instances += p.instances;
    merged.passes += p.passes;
    merged.failures += p.failures;
    merged.witnesses.insert(merged.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  return merged;
}

}  // namespace

SweepReport four_term_sweep(int grading, bool even_only, bool check_character,
                            bool check_chromatic, int jobs) {
  const auto classes = enumerate_binary_delta_matroids(grading, even_only);
  const long long total = static_cast<long long>(classes.size());
  return run_chunked(total, jobs, [&](long long lo, long long hi, SweepReport& rep) {
    for (long long i = lo; i < hi; ++i) {
      const DeltaMatroid& d = classes[static_cast<size_t>(i)];
      for (int a = 0; a < grading; ++a)
        for (int b = 0; b < grading; ++b) {
          if (a == b) continue;
          if (check_character) {
            auto r = check_four_term([](const DeltaMatroid& x) { return character_xi(x); }, d, a, b);
            ++rep.instances;
            if (r.pass) {
              ++rep.passes;
            } else {
              ++rep.failures;
              rep.witnesses.push_back({"4-term failed for character_xi", d.system(), a, b,
                                       std::move(r.tuple), r.lhs.to_string(), r.rhs.to_string()});
            }
          }
          if (check_chromatic) {
            auto r = check_four_term(
                [](const DeltaMatroid& x) { return chromatic(HopfElement::basis(x)); }, d, a, b);
            ++rep.instances;
            if (r.pass) {
              ++rep.passes;
            } else {
              ++rep.failures;
              rep.witnesses.push_back({"4-term failed for chromatic", d.system(), a, b,
                                       std::move(r.tuple), r.lhs.to_string(), r.rhs.to_string()});
            }
          }
        }
    }
  });
}

SweepReport move_algebra_sweep(int grading, bool even_only, int jobs) {
  const auto classes = enumerate_binary_delta_matroids(grading, even_only);
  const long long total = static_cast<long long>(classes.size());
  return run_chunked(total, jobs, [&](long long lo, long long hi, SweepReport& rep) {
    for (long long i = lo; i < hi; ++i) {
      const DeltaMatroid& d = classes[static_cast<size_t>(i)];
      const SetSystem& s = d.system();
      for (int a = 0; a < grading; ++a)
        for (int b = 0; b < grading; ++b) {
          if (a == b) continue;
          ++rep.instances;
          bool ok = true;
          auto fail = [&](const std::string& what) {
            ok = false;
            rep.witnesses.push_back({what, d.system(), a, b, std::nullopt, "", ""});
          };
          SetSystem first = first_vassiliev_family(s, a, b);
          SetSystem second = second_vassiliev_family(s, a, b);
          if (second_vassiliev_family_alt(s, a, b) != second) fail("second-move definitions differ");
          if (first_vassiliev_family(first, a, b) != s) fail("first move not an involution");
          if (second_vassiliev_family(second, a, b) != s) fail("second move not an involution");
          if (first_vassiliev_family(second, a, b) != second_vassiliev_family(first, a, b))
            fail("moves do not commute");
          for (const SetSystem* moved : {&first, &second}) {
            if (sea_violation(*moved)) {
              fail("move broke the exchange axiom");
            } else if (!is_binary(trusted_delta_matroid(*moved))) {
              fail("move left the binary class");
            }
          }
          if (ok) ++rep.passes;
          else ++rep.failures;
        }
    }
  });
}

SweepReport graphical_lemma_sweep(int grading, bool even_only) {
  SweepReport rep;
  for (const DeltaMatroid& d : enumerate_binary_delta_matroids(grading, even_only)) {
    ++rep.instances;
    const bool graphical = is_graphical(d);
    const bool empty_feasible = d.system().contains(0);
    if (graphical == empty_feasible) {
      ++rep.passes;
    } else {
      ++rep.failures;
      rep.witnesses.push_back({graphical ? "graphical without feasible empty set"
                                         : "empty set feasible but not graphical",
                               d.system(), -1, -1, std::nullopt, "", ""});
    }
  }
  return rep;
}

SweepReport interlacement_sweep(int chords) {
  if (chords < 0 || chords > 5) throw CapError("interlacement sweep capped at 5 chords");
  SweepReport rep;
  for (const RibbonGraph& c : all_chord_diagrams(chords)) {
    ++rep.instances;
    DeltaMatroid quasi = delta_matroid_of_ribbon_graph(c);
    DeltaMatroid graph = delta_matroid_of_framed_graph(intersection_graph(c));
    if (quasi == graph) {
      ++rep.passes;
    } else {
      ++rep.failures;
      rep.witnesses.push_back({"quasi-tree family differs from interlacement minors",
                               quasi.system(), -1, -1, std::nullopt, quasi.system().to_string(),
                               graph.system().to_string()});
    }
  }
  return rep;
}

SpanReport primitive_value_span(int grading, bool even_only) {
  if (grading < 1 || grading > kEnumerateCap)
    throw CapError("span grading " + std::to_string(grading) + " over cap");
  SpanReport out;
  out.grading = grading;
  out.even_only = even_only;
  const auto classes = enumerate_binary_delta_matroids(grading, even_only);
  out.class_count = static_cast<int>(classes.size());
  const int dim = grading + 1;
  RowSpace space(dim);
  for (const DeltaMatroid& d : classes) {
    XPoly value = character_xi(primitive_projection(HopfElement::basis(d)));
    if (!value.is_zero()) space.insert(xpoly_to_vector(value, dim));
  }
  out.dimension = space.rank();
  for (const auto& row : space.basis()) out.basis.push_back(XPoly(row));
  out.monomial_in_span.assign(static_cast<size_t>(dim), false);
  for (int p = 0; p < dim; ++p)
    out.monomial_in_span[static_cast<size_t>(p)] =
        space.contains(xpoly_to_vector(XPoly::x_power(p), dim));
  out.zero_linear_subspace_contained = true;
  for (int p = 0; p < dim; ++p) {
    if (p == 1) continue;
    if (!out.monomial_in_span[static_cast<size_t>(p)]) out.zero_linear_subspace_contained = false;
  }
  out.linear_term_in_span = out.monomial_in_span[1];
  return out;
}

}  // namespace deltachroma
