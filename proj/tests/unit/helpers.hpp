#pragma once

#include <string_view>

#include "doctest.h"
#include "specalc/block_model.hpp"
#include "specalc/dsl.hpp"
#include "specalc/errors.hpp"
#include "specalc/gaussian_rational.hpp"
#include "specalc/profile.hpp"

namespace specalc::test {

inline GaussianRational gq(std::string_view s) { return GaussianRational::parse(s); }

inline SpectralProfile op(std::string_view text) { return model_profile(parse_operator(text)); }

inline IsolatedAtom pole(std::string_view p, Rank r = Rank::infinite) {
  return {gq(p), PointClass::pole, r, std::nullopt};
}

inline IsolatedAtom qn(std::string_view p) { return {gq(p), PointClass::iso_nonpole, Rank::infinite, std::nullopt}; }

inline ClusterAtom cluster(std::string_view c, std::string_view r, std::string_view q,
                           PointClass cls = PointClass::pole, Rank rank = Rank::finite) {
  return {gq(c), gq(r), gq(q), cls, rank};
}

inline PointSet pts(std::initializer_list<const char*> xs) {
  PointSet s;
  for (const char* x : xs) s.insert(gq(x));
  return s;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::verification_failed;
}

}  // namespace specalc::test

namespace doctest {
template <>
struct StringMaker<specalc::GaussianRational> {
  static String convert(const specalc::GaussianRational& g) { return g.to_string().c_str(); }
};
template <>
struct StringMaker<specalc::PointSet> {
  static String convert(const specalc::PointSet& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<specalc::SpectralProfile> {
  static String convert(const specalc::SpectralProfile& p) { return specalc::render_profile(p).c_str(); }
};
}  // namespace doctest
