#include "dyckbij/bijection.hpp"

#include <vector>

namespace dyckbij {

namespace {

// match[i] = index of the downstep closing upstep i; filled for every upstep.
// Balanced contiguous subranges keep their internal matches, so one table
// serves every range the transforms visit.
std::vector<int> match_table(const std::string& text) {
  std::vector<int> match(text.size(), -1);
  std::vector<int> open;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U') {
      open.push_back(static_cast<int>(i));
    } else {
      match[static_cast<size_t>(open.back())] = static_cast<int>(i);
      open.pop_back();
    }
  }
  return match;
}

// Work items: transform a range of the input, or append a literal run.
struct Task {
  enum Kind { apply, run } kind;
  int a;    // apply: range begin; run: repeat count
  int b;    // apply: range end (exclusive); run: 1 = 'U', 0 = 'D'
};

void push_run(std::vector<Task>& tasks, char step, int count) {
  if (count > 0) tasks.push_back({Task::run, count, step == 'U' ? 1 : 0});
}

// Splits [a, b) into primitive factors and queues them left to right.
void push_components(std::vector<Task>& tasks, const std::vector<int>& match, int a, int b) {
  std::vector<int> starts;
  for (int c = a; c < b; c = match[static_cast<size_t>(c)] + 1) starts.push_back(c);
  for (size_t i = starts.size(); i-- > 0;) {
    int c = starts[i];
    tasks.push_back({Task::apply, c, match[static_cast<size_t>(c)] + 1});
  }
}

}  // namespace

// Every primitive path is U Q (UD)^i D with i maximal, so Q is empty or ends
// DD.  The image is U^{i+1} F(R) UD D^{i+1} when Q = U R D is primitive and
// U^{i+1} F(Q) D^{i+1} otherwise; non-primitive paths map factor by factor.
DyckPath forward(const DyckPath& p) {
  const std::string& text = p.text();
  std::vector<int> match = match_table(text);
  std::string out;
  out.reserve(text.size());
  std::vector<Task> tasks;
  tasks.push_back({Task::apply, 0, p.length()});
  while (!tasks.empty()) {
    Task t = tasks.back();
    tasks.pop_back();
    if (t.kind == Task::run) {
      out.append(static_cast<size_t>(t.a), t.b ? 'U' : 'D');
      continue;
    }
    int a = t.a;
    int b = t.b;
    if (a == b) continue;
    if (match[static_cast<size_t>(a)] != b - 1) {
      push_components(tasks, match, a, b);
      continue;
    }
    // Primitive: strip the maximal trailing (UD)^i inside the arch.
    int j = b - 1;  // exclusive end of Q
    while (j - 2 >= a + 1 && text[static_cast<size_t>(j - 2)] == 'U' &&
           text[static_cast<size_t>(j - 1)] == 'D') {
      j -= 2;
    }
    int i = (b - 1 - j) / 2;
    bool q_primitive = j > a + 1 && match[static_cast<size_t>(a + 1)] == j - 1;
    if (q_primitive) {
      push_run(tasks, 'D', i + 1);
      push_run(tasks, 'D', 1);
      push_run(tasks, 'U', 1);
      tasks.push_back({Task::apply, a + 2, j - 1});
      push_run(tasks, 'U', i + 1);
    } else {
      push_run(tasks, 'D', i + 1);
      tasks.push_back({Task::apply, a + 1, j});
      push_run(tasks, 'U', i + 1);
    }
  }
  return unchecked_path(std::move(out));
}

// Every primitive path is U^{i+1} Q D^{i+1} where i+1 is the lowest valley
// height (the full height when there is no valley), making Q empty or
// non-primitive.  The preimage is U U G(R) D (UD)^i D when Q = R UD ends UD
// and U G(Q) (UD)^i D otherwise.
DyckPath inverse(const DyckPath& p) {
  const std::string& text = p.text();
  std::vector<int> match = match_table(text);
  std::vector<int> height(text.size() + 1, 0);
  for (size_t i = 0; i < text.size(); ++i) {
    height[i + 1] = height[i] + (text[i] == 'U' ? 1 : -1);
  }
  std::string out;
  out.reserve(text.size());
  std::vector<Task> tasks;
  tasks.push_back({Task::apply, 0, p.length()});
  while (!tasks.empty()) {
    Task t = tasks.back();
    tasks.pop_back();
    if (t.kind == Task::run) {
      out.append(static_cast<size_t>(t.a), t.b ? 'U' : 'D');
      continue;
    }
    int a = t.a;
    int b = t.b;
    if (a == b) continue;
    if (match[static_cast<size_t>(a)] != b - 1) {
      push_components(tasks, match, a, b);
      continue;
    }
    int v = (b - a) / 2;  // no valley: the path is U^v D^v
    for (int x = a + 1; x < b; ++x) {
      if (text[static_cast<size_t>(x - 1)] == 'D' && text[static_cast<size_t>(x)] == 'U') {
        int rel = height[static_cast<size_t>(x)] - height[static_cast<size_t>(a)];
        if (rel < v) v = rel;
      }
    }
    int i = v - 1;
    int qa = a + v;
    int qb = b - v;
    bool q_ends_ud = qb - qa >= 2 && text[static_cast<size_t>(qb - 2)] == 'U' &&
                     text[static_cast<size_t>(qb - 1)] == 'D';
    if (q_ends_ud) {
      push_run(tasks, 'D', 1);
      for (int r = 0; r < i; ++r) {
        push_run(tasks, 'D', 1);
        push_run(tasks, 'U', 1);
      }
      push_run(tasks, 'D', 1);
      tasks.push_back({Task::apply, qa, qb - 2});
      push_run(tasks, 'U', 2);
    } else {
      push_run(tasks, 'D', 1);
      for (int r = 0; r < i; ++r) {
        push_run(tasks, 'D', 1);
        push_run(tasks, 'U', 1);
      }
      tasks.push_back({Task::apply, qa, qb});
      push_run(tasks, 'U', 1);
    }
  }
  return unchecked_path(std::move(out));
}

DyckPath forward_iter(const DyckPath& p, long k) {
  DyckPath q = p;
  for (long i = 0; i < k; ++i) q = forward(q);
  return q;
}

DyckPath inverse_iter(const DyckPath& p, long k) {
  DyckPath q = p;
  for (long i = 0; i < k; ++i) q = inverse(q);
  return q;
}

}  // namespace dyckbij
