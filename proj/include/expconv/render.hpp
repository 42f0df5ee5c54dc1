#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "expconv/analog_signal.hpp"
#include "expconv/discrete_signal.hpp"
#include "expconv/real_form.hpp"
#include "expconv/vandermonde.hpp"

namespace expconv {

/// Deterministic %.9g with -0 normalized; closed-form display.
std::string format_number(double v);
/// Real values plain, complex values as "(a+bi)".
std::string format_complex(Complex v);

/// Complex exponential form, terms sorted by (re, im) of root; the impulse
/// atom, when present, renders inline as w*delta(t).
std::string render_analog(const AnalogSignal& s);

/// Complex power-basis form P(k)*(r)^k, terms sorted by root.
std::string render_discrete(const DiscretePowerForm& pf);

std::string render_real(const RealForm& f);

/// "W @ k=D" rows for the impulse atoms.
std::vector<std::string> impulse_rows(const DiscretePowerForm& pf);
std::vector<std::string> impulse_rows(const RealForm& f);

std::string render_matrix(const VandermondeSystem& sys);
std::string render_cvector(std::span<const Complex> v);

/// 17 significant digits; header t,re,im.
void write_csv_analog(std::ostream& os, const AnalogSignal& s, double start, double stop,
                      int count);
/// 17 significant digits; header k,value,impulse. Rows use the power-form
/// split (same as the rendered closed form): value is the P(k)*r^k part,
/// impulse weights appear only on their support row, and value + impulse is
/// the exact sample.
void write_csv_discrete(std::ostream& os, const DiscreteSignal& s, std::int64_t k0,
                        std::int64_t k1);

} // namespace expconv
