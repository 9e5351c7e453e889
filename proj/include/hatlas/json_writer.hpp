#ifndef HATLAS_JSON_WRITER_HPP
#define HATLAS_JSON_WRITER_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hatlas {

// %.17g: every double round-trips and the text is stable across runs.
std::string format_double(double x);

/* Streaming JSON writer with fully deterministic output: key order is
 * the emission order, numbers are printed with 17 significant digits.
 * Reports must be byte-identical between runs with the same config, so
 * output never goes through a library serializer whose float formatting
 * we do not own. */
class JsonWriter {
  public:
    std::string str() const { return out_; }

    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(std::string_view name);
    void value(double x);
    void value(bool b);
    void value(std::int64_t n);
    void value(std::uint64_t n);
    void value(int n) { value(static_cast<std::int64_t>(n)); }
    void value(std::string_view s);
    void value(const char* s) { value(std::string_view(s)); }
    // Real values print as a number, complex ones as [re, im].
    void value(std::complex<double> z);

  private:
    void separator();
    void escaped(std::string_view s);

    std::string out_;
    std::vector<bool> first_in_scope_{true};
    bool after_key_ = false;
};

}  // namespace hatlas

#endif
