#include "rootzeta/checkpoint.hpp"

#include <sstream>

#include "rootzeta/errors.hpp"

namespace rootzeta {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(s);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string header_text(const CheckpointHeader& h) {
  std::ostringstream out;
  out << "# rootzeta-checkpoint 1\n"
      << "# system " << h.system << "\n"
      << "# rho " << h.rho << "\n"
      << "# mode " << h.mode << "\n"
      << "# split-depth " << h.split_depth << "\n"
      << "# tasks " << h.tasks << "\n";
  return out.str();
}

}  // namespace

std::string CheckpointFile::format_line(const TaskRecord& task) {
  std::ostringstream out;
  out << format_word(task.prefix) << '\t';
  if (task.counterexample) {
    const auto& c = *task.counterexample;
    out << "cex=" << format_word(c.word) << '/' << c.gamma + 1 << '/' << format_zeta(c.zeta);
    if (c.twisted) out << "/twisted";
  } else {
    out << "ok";
  }
  out << '\t' << task.depth_limit << '\t';
  for (std::size_t i = 0; i < task.histogram.size(); ++i) {
    if (i) out << ',';
    out << task.histogram[i];
  }
  return out.str();
}

TaskRecord CheckpointFile::parse_line(const std::string& line, int rank) {
  const auto fields = split(line, '\t');
  if (fields.size() != 4) throw ParameterError("malformed checkpoint line: " + line);
  TaskRecord t;
  t.prefix = parse_word(fields[0], rank);
  if (fields[1].rfind("cex=", 0) == 0) {
    const auto parts = split(fields[1].substr(4), '/');
    if (parts.size() != 3 && !(parts.size() == 4 && parts[3] == "twisted")) {
      throw ParameterError("malformed checkpoint status: " + fields[1]);
    }
    Counterexample c;
    c.word = parse_word(parts[0], rank);
    try {
      c.gamma = std::stoi(parts[1]) - 1;
    } catch (const std::logic_error&) {
      throw ParameterError("malformed checkpoint status: " + fields[1]);
    }
    c.zeta = parse_zeta(parts[2]);
    c.twisted = parts.size() == 4;
    t.counterexample = std::move(c);
  } else if (fields[1] != "ok") {
    throw ParameterError("malformed checkpoint status: " + fields[1]);
  }
  try {
    std::size_t used = 0;
    t.depth_limit = std::stoi(fields[2], &used);
    if (used != fields[2].size()) throw ParameterError("bad depth limit");
    for (const auto& x : split(fields[3], ',')) {
      if (x.empty()) continue;
      t.histogram.push_back(std::stoull(x, &used));
      if (used != x.size()) throw ParameterError("bad count");
    }
  } catch (const std::logic_error&) {
    throw ParameterError("malformed checkpoint line: " + line);
  }
  return t;
}

CheckpointFile::CheckpointFile(std::filesystem::path path, CheckpointHeader header)
    : path_(std::move(path)), header_(std::move(header)) {
  const int rank = std::stoi(header_.system.substr(1));
  bool fresh = true;
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    // a line without its newline was cut off mid-write; drop it
    const auto last_newline = content.rfind('\n');
    const std::size_t complete = last_newline == std::string::npos ? 0 : last_newline + 1;
    if (complete != content.size()) {
      content.resize(complete);
      std::filesystem::resize_file(path_, complete);
    }
    if (!content.empty()) {
      fresh = false;
      std::string stored_header;
      std::istringstream lines(content);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
          stored_header += line + "\n";
          continue;
        }
        auto t = parse_line(line, rank);
        completed_[{t.depth_limit, t.prefix}] = std::move(t);
      }
      if (stored_header != header_text(header_)) {
        throw ParameterError("checkpoint " + path_.string() + " belongs to a different run");
      }
    }
  }
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  out_.open(path_, std::ios::app | std::ios::binary);
  if (!out_) throw ParameterError("cannot open checkpoint " + path_.string());
  if (fresh) out_ << header_text(header_) << std::flush;
}

void CheckpointFile::record(const TaskRecord& task) {
  std::lock_guard<std::mutex> lock(mutex_);
  out_ << format_line(task) << '\n' << std::flush;
  completed_[{task.depth_limit, task.prefix}] = task;
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const std::string& system, const std::string& rho) {
  return dir / (system + "-" + rho + ".tsv");
}

}  // namespace rootzeta
