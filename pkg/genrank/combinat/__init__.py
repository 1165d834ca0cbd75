# -*- coding: utf-8 -*-
from .compositions import (
    WeakComposition, SupportFilter, enumerate_lambda, enumerate_Lambda,
    multiset_count, stars_and_bars_count, multinomial, supported_count,
    zhu_identity_holds, fiber_counting_identity_holds)
from .transversal import fiber_map, fiber_images, balanced_fiber_transversal
