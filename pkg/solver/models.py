from django.db import models


# ========== BENCH RECORDS ==========
class BenchRun(models.Model):
    """One `tww bench --record` invocation over an instance directory"""
    TRACKS = [
        ('exact', 'Exact track'),
        ('heuristic', 'Heuristic track'),
    ]

    started_at = models.DateTimeField(auto_now_add=True)
    track = models.CharField(max_length=10, choices=TRACKS, default='exact')
    directory = models.CharField(max_length=500)
    seed = models.BigIntegerField(default=0)
    time_limit = models.FloatField()  # seconds per instance
    heuristic_optimal_fraction = models.FloatField(blank=True, null=True)  # only with --compare

    def __str__(self):
        return f"{self.get_track_display()} run on {self.directory} ({self.started_at:%Y-%m-%d %H:%M})"


class BenchResult(models.Model):
    """Outcome for one instance, mirroring a row of the bench CSV"""
    run = models.ForeignKey(BenchRun, on_delete=models.CASCADE, related_name='results')
    name = models.CharField(max_length=255)
    n = models.PositiveIntegerField()
    m = models.PositiveIntegerField()
    width = models.PositiveIntegerField(blank=True, null=True)  # empty when the solver failed
    optimal = models.BooleanField(default=False)
    elapsed_ms = models.PositiveIntegerField()
    stage = models.CharField(max_length=50)
    verified = models.BooleanField(default=False)

    class Meta:
        unique_together = ['run', 'name']
        ordering = ['run', 'name']

    def __str__(self):
        return f"{self.name}: width {self.width if self.width is not None else '-'} ({self.stage})"
