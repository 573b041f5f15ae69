/*
 * Copyright 2026 The cdwork Authors
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

#include <math.h>
#include <stdio.h>

#include "cdwork/cdwork.h"

int main(void) {
    cdwork_ho* ho = NULL;
    cdwork_work_moments m;
    if (cdwork_ho_create(1.0, 3.0, 0.8, 120, INFINITY, &ho) != CDWORK_OK) {
        fprintf(stderr, "%s\n", cdwork_last_error());
        return 1;
    }
    if (cdwork_ho_work_moments(ho, 0.4, &m) != CDWORK_OK) return 1;
    cdwork_ho_destroy(ho);
    printf("cdwork %s mean work %.6f\n", cdwork_version(), m.mean_cd);
    return fabs(m.mean_cd - 0.5) < 1e-8 ? 0 : 1;
}
