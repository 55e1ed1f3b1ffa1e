/*
 * Copyright 2026 The DFI Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DFI_WORKER_POOL_HPP
#define DFI_WORKER_POOL_HPP

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dfi::detail {

/**
 * Fork-join pool: run() hands out task indices to the calling thread and
 * workers-1 helper threads, and returns when every task has finished.
 *
 * Task claims go through one 64-bit word holding (generation, next index),
 * so a helper that wakes late can never claim a task of a later run. run()
 * waits for completed tasks, not for helpers to check in.
 */
class WorkerPool
{
public:
    explicit WorkerPool(unsigned workers)
    {
        for (unsigned i = 1; i < workers; ++i) threads_.emplace_back([this] { loop(); });
    }

    ~WorkerPool()
    {
        {
            std::lock_guard lock(mutex_);
            stop_ = true;
        }
        wake_.notify_all();
        for (auto& t : threads_) t.join();
    }

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    void run(std::size_t tasks, const std::function<void(std::size_t)>& fn)
    {
        if (threads_.empty() || tasks <= 1) {
            for (std::size_t i = 0; i < tasks; ++i) fn(i);
            return;
        }
        std::uint64_t generation;
        {
            std::lock_guard lock(mutex_);
            generation = ++generation_;
            job_ = &fn;
            tasks_ = tasks;
            finished_ = 0;
            error_ = nullptr;
            claim_.store(generation << 32);
        }
        wake_.notify_all();
        work(generation, fn, tasks);
        std::unique_lock lock(mutex_);
        done_.wait(lock, [&] { return finished_ == tasks; });
        job_ = nullptr;
        if (error_) std::rethrow_exception(error_);
    }

private:
    void work(std::uint64_t generation, const std::function<void(std::size_t)>& fn, std::size_t tasks)
    {
        while (true) {
            std::uint64_t word = claim_.load();
            std::size_t index;
            do {
                index = static_cast<std::size_t>(word & 0xffffffffu);
                if ((word >> 32) != generation || index >= tasks) return;
            } while (!claim_.compare_exchange_weak(word, word + 1));

            std::exception_ptr error;
            try {
                fn(index);
            } catch (...) {
                error = std::current_exception();
            }
            std::lock_guard lock(mutex_);
            if (error && !error_) error_ = error;
            if (++finished_ == tasks) done_.notify_one();
        }
    }

    void loop()
    {
        std::uint64_t seen = 0;
        while (true) {
            const std::function<void(std::size_t)>* job;
            std::size_t tasks;
            {
                std::unique_lock lock(mutex_);
                wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
                job = job_;
                tasks = tasks_;
            }
            // job stays valid while a task of this generation is unfinished
            if (job) work(seen, *job, tasks);
        }
    }

    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const std::function<void(std::size_t)>* job_ = nullptr;
    std::size_t tasks_ = 0;
    std::size_t finished_ = 0;
    std::uint64_t generation_ = 0;
    std::atomic<std::uint64_t> claim_{0};
    std::exception_ptr error_;
    bool stop_ = false;
};

} // namespace dfi::detail

#endif
