#ifndef FOCH_SERIES_HPP
#define FOCH_SERIES_HPP

#include <map>
#include <string>
#include <vector>

namespace foch {

/// A named scalar time series attached to a trajectory.
struct DiagnosticSeries {
  std::string name;
  std::vector<double> times;
  std::vector<double> values;
  std::map<std::string, std::string> metadata;

  void push(double t, double v) {
    times.push_back(t);
    values.push_back(v);
  }

  double front() const { return values.front(); }
  double back() const { return values.back(); }
  double max() const {
    double m = values.front();
    for (double v : values) m = v > m ? v : m;
    return m;
  }
};

}  // namespace foch

#endif
