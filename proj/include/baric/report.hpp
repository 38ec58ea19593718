#pragma once

// Deterministic line-oriented reports and the CLI exit-code convention:
// 0 when nothing failed, 1 if any check failed, 2 on input or usage errors.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace baric {

enum class Status { Pass, Fail, Error, NotApplicable };

inline const char *status_name(Status s) {
  switch (s) {
  case Status::Pass:
    return "PASS";
  case Status::Fail:
    return "FAIL";
  case Status::Error:
    return "ERROR";
  case Status::NotApplicable:
    return "N/A";
  }
  return "?";
}

class Report {
public:
  void info(const std::string &key, const std::string &value) {
    lines_.push_back({false, key, Status::Pass, value});
  }

  void check(const std::string &name, Status s, const std::string &detail) {
    lines_.push_back({true, name, s, detail});
  }

  void check(const std::string &name, bool pass, const std::string &detail) {
    check(name, pass ? Status::Pass : Status::Fail, detail);
  }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto &l : lines_)
      n += l.is_check && l.status == s;
    return n;
  }

  int exit_code() const {
    if (count(Status::Error))
      return 2;
    return count(Status::Fail) ? 1 : 0;
  }

  /// Human form: "CHECK <name>: <STATUS> — <detail>". Porcelain form:
  /// tab-separated "CHECK\t<name>\t<STATUS>\t<detail>" and
  /// "INFO\t<key>\t<value>".
  void print(std::ostream &os, bool porcelain) const {
    std::size_t checks = 0;
    for (const auto &l : lines_) {
      if (porcelain) {
        if (l.is_check)
          os << "CHECK\t" << l.key << '\t' << status_name(l.status) << '\t' << l.text
             << '\n';
        else
          os << "INFO\t" << l.key << '\t' << l.text << '\n';
      } else if (l.is_check) {
        os << "CHECK " << l.key << ": " << status_name(l.status);
        if (!l.text.empty())
          os << " — " << l.text;
        os << '\n';
      } else {
        os << l.key << ": " << l.text << '\n';
      }
      checks += l.is_check;
    }
    if (porcelain)
      os << "SUMMARY\t" << checks << '\t' << count(Status::Pass) << '\t'
         << count(Status::Fail) << '\t' << count(Status::Error) << '\t'
         << count(Status::NotApplicable) << '\n';
    else
      os << "SUMMARY: " << checks << " checks, " << count(Status::Pass) << " passed, "
         << count(Status::Fail) << " failed, " << count(Status::Error) << " errors, "
         << count(Status::NotApplicable) << " not applicable\n";
  }

private:
  struct Line {
    bool is_check;
    std::string key;
    Status status;
    std::string text;
  };
  std::vector<Line> lines_;
};

} // namespace baric
