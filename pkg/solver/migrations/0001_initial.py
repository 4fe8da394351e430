from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='BenchRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('started_at', models.DateTimeField(auto_now_add=True)),
                ('track', models.CharField(choices=[('exact', 'Exact track'), ('heuristic', 'Heuristic track')], default='exact', max_length=10)),
                ('directory', models.CharField(max_length=500)),
                ('seed', models.BigIntegerField(default=0)),
                ('time_limit', models.FloatField()),
                ('heuristic_optimal_fraction', models.FloatField(blank=True, null=True)),
            ],
        ),
        migrations.CreateModel(
            name='BenchResult',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=255)),
                ('n', models.PositiveIntegerField()),
                ('m', models.PositiveIntegerField()),
                ('width', models.PositiveIntegerField(blank=True, null=True)),
                ('optimal', models.BooleanField(default=False)),
                ('elapsed_ms', models.PositiveIntegerField()),
                ('stage', models.CharField(max_length=50)),
                ('verified', models.BooleanField(default=False)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='results', to='solver.benchrun')),
            ],
            options={
                'ordering': ['run', 'name'],
                'unique_together': {('run', 'name')},
            },
        ),
    ]
