#ifndef AMSG_GLUING_HPP_
#define AMSG_GLUING_HPP_

#include "amsg/arith.hpp"
#include "amsg/charseq.hpp"
#include "amsg/semigroup.hpp"

namespace amsg {

  //! Parameters of the gluing S (+)_{d,f} N: coprime d > 1 and f >= 1.
  class GluingSpec {
   public:
    //! Throws InvalidGluingFactor (d < 2 or f = 0) or NonCoprimePair.
    GluingSpec(Int d, Int f);

    Int d() const noexcept {
      return _d;
    }
    Int f() const noexcept {
      return _f;
    }

    friend bool operator==(GluingSpec const&, GluingSpec const&) = default;

   private:
    Int _d;
    Int _f;
  };

  //! <d a_1, ..., d a_t, f>
  NumericalSemigroup glue(NumericalSemigroup const& s, GluingSpec const& g);

  //! (d v_0, ..., d v_h, f), validated.
  CharacteristicSequence glue_sequence(CharacteristicSequence const& cs,
                                       GluingSpec const&             g);

  //! d c(S) + (d - 1)(f - 1)
  Int glued_conductor(Int base_conductor, GluingSpec const& g);

  //! For S = <b_1, ..., b_{t-1}> A-M of degree m: d m^2 > f >
  //! d gcd(b_1, ..., b_{t-2}) b_{t-1}. When it holds the glued semigroup is
  //! A-M of degree d m.
  //!
  //! When S = <1> the role of gcd(b_1..b_{t-2}) b_{t-1} is played by
  //! e_0 v_1 = m of its sequence (m, 1), i.e. d m^2 > f > d m, which is
  //! exactly the condition for (d m, d, f) to be an A-M sequence.
  bool am_glue_check(NumericalSemigroup const& s, Int m, GluingSpec const& g);

  struct Decomposition {
    NumericalSemigroup base;
    GluingSpec         gluing;
  };

  //! Split an A-M semigroup of embedding dimension t >= 3 as
  //! <a_1/d, ..., a_{t-1}/d> (+)_{d, a_t} N with d = gcd(a_1, ..., a_{t-1}).
  //! Throws EmbeddingDimensionTooSmall or NotAm.
  Decomposition decompose(NumericalSemigroup const& s);

}  // namespace amsg

#endif  // AMSG_GLUING_HPP_
